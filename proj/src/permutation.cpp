#include "magnus/permutation.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace magnus {

namespace {

std::string join_letters(const Letters& ls, const char* sep)
{
	std::ostringstream os;
	os << "(";
	for (size_t i = 0; i < ls.size(); ++i) {
		if (i)
			os << sep;
		os << ls[i];
	}
	os << ")";
	return os.str();
}

} // namespace

Word::Word(Letters letters) : letters_(std::move(letters))
{
	Letters sorted = letters_;
	std::sort(sorted.begin(), sorted.end());
	for (size_t i = 0; i < sorted.size(); ++i) {
		if (sorted[i] <= 0)
			throw std::invalid_argument("Word: letters must be positive");
		if (i > 0 && sorted[i] == sorted[i - 1])
			throw std::invalid_argument("Word: repeated letter " + std::to_string(sorted[i]));
	}
}

std::string Word::str() const { return join_letters(letters_, " "); }

Permutation::Permutation(Letters image) : image_(std::move(image))
{
	int n = static_cast<int>(image_.size());
	std::vector<bool> seen(n, false);
	for (int v : image_) {
		if (v < 1 || v > n || seen[v - 1])
			throw std::invalid_argument("Permutation: not a bijection of {1,...," +
			                            std::to_string(n) + "}");
		seen[v - 1] = true;
	}
}

Permutation Permutation::identity(int n)
{
	Letters img(n);
	for (int i = 0; i < n; ++i)
		img[i] = i + 1;
	return Permutation(std::move(img));
}

int Permutation::ascents() const
{
	int a = 0;
	for (size_t i = 0; i + 1 < image_.size(); ++i)
		if (image_[i] < image_[i + 1])
			++a;
	return a;
}

int Permutation::descents() const
{
	int d = 0;
	for (size_t i = 0; i + 1 < image_.size(); ++i)
		if (image_[i] > image_[i + 1])
			++d;
	return d;
}

Permutation Permutation::inverse() const
{
	Letters inv(image_.size());
	for (size_t i = 0; i < image_.size(); ++i)
		inv[image_[i] - 1] = static_cast<int>(i) + 1;
	return Permutation(std::move(inv));
}

Permutation Permutation::reversed() const
{
	Letters img(image_.rbegin(), image_.rend());
	return Permutation(std::move(img));
}

std::string Permutation::str() const { return join_letters(image_, " "); }

Permutation standardize(const Word& w)
{
	const Letters& ls = w.letters();
	Letters sorted = ls;
	std::sort(sorted.begin(), sorted.end());
	Letters img(ls.size());
	for (size_t i = 0; i < ls.size(); ++i) {
		auto it = std::lower_bound(sorted.begin(), sorted.end(), ls[i]);
		img[i] = static_cast<int>(it - sorted.begin()) + 1;
	}
	return Permutation(std::move(img));
}

Word shift(const Permutation& p, int k)
{
	Letters ls = p.image();
	for (int& v : ls)
		v += k;
	return Word(std::move(ls));
}

Word restrict_to(const Word& w, const std::set<int>& keep)
{
	Letters out;
	for (int v : w.letters())
		if (keep.count(v))
			out.push_back(v);
	return Word(std::move(out));
}

std::vector<Permutation> all_permutations(int n)
{
	std::vector<Permutation> out;
	Letters img(n);
	for (int i = 0; i < n; ++i)
		img[i] = i + 1;
	do {
		out.push_back(Permutation(img));
	} while (std::next_permutation(img.begin(), img.end()));
	return out;
}

std::vector<Word> all_arrangements(Letters letters)
{
	std::sort(letters.begin(), letters.end());
	std::vector<Word> out;
	do {
		out.push_back(Word(letters));
	} while (std::next_permutation(letters.begin(), letters.end()));
	return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.str(); }

} // namespace magnus
