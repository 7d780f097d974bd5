#pragma once

#include <compare>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace magnus {

using Letters = std::vector<int>;

/// A sequence of distinct positive integers, e.g. (3 2 4) or (7 1 9).
class Word {
public:
	Word() = default;
	explicit Word(Letters letters);

	const Letters& letters() const { return letters_; }
	int size() const { return static_cast<int>(letters_.size()); }
	bool empty() const { return letters_.empty(); }

	std::string str() const;

	friend bool operator==(const Word&, const Word&) = default;
	friend auto operator<=>(const Word&, const Word&) = default;

private:
	Letters letters_;
};

/// A permutation of {1,...,n} in one-line notation (sigma(1) ... sigma(n)).
/// Grade 0 is the empty permutation, the unit of both Hopf products.
class Permutation {
public:
	Permutation() = default;
	explicit Permutation(Letters image);

	static Permutation identity(int n);

	int grade() const { return static_cast<int>(image_.size()); }
	const Letters& image() const { return image_; }
	bool empty() const { return image_.empty(); }

	/// sigma(i), 1-indexed.
	int operator()(int i) const { return image_[i - 1]; }

	/// Positions i in {1,...,n-1} with sigma(i) < sigma(i+1).
	int ascents() const;
	/// Positions i in {1,...,n-1} with sigma(i) > sigma(i+1).
	int descents() const;

	Permutation inverse() const;
	Permutation reversed() const;

	Word as_word() const { return Word(image_); }
	std::string str() const;

	/// Ordered by grade, then lexicographically on the image sequence.
	friend bool operator==(const Permutation&, const Permutation&) = default;
	friend auto operator<=>(const Permutation& a, const Permutation& b)
	{
		if (auto c = a.grade() <=> b.grade(); c != 0)
			return c;
		return a.image_ <=> b.image_;
	}

private:
	Letters image_;
};

/// Order-isomorphic permutation of a repeat-free word: the unique increasing
/// bijection {letters} -> {1,...,m} applied letterwise. st((3 2 4)) = (2 1 3).
Permutation standardize(const Word& w);

/// The word obtained by adding k to every letter of p.
Word shift(const Permutation& p, int k);

/// Subsequence of w keeping exactly the letters in `keep`, order preserved.
Word restrict_to(const Word& w, const std::set<int>& keep);

/// All n! permutations of grade n, lexicographically ordered.
std::vector<Permutation> all_permutations(int n);

/// All arrangements of the given letter set, lexicographically ordered.
std::vector<Word> all_arrangements(Letters letters);

std::ostream& operator<<(std::ostream&, const Word&);
std::ostream& operator<<(std::ostream&, const Permutation&);

} // namespace magnus
