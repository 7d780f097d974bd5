#include "magnus/hopf.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "magnus/rng.hpp"

namespace magnus {

namespace {

void shuffle_rec(const Letters& u, size_t iu, const Letters& v, size_t iv, Letters& acc,
                 std::vector<Word>& out)
{
	if (iu == u.size() && iv == v.size()) {
		out.push_back(Word(acc));
		return;
	}
	if (iu < u.size()) {
		acc.push_back(u[iu]);
		shuffle_rec(u, iu + 1, v, iv, acc, out);
		acc.pop_back();
	}
	if (iv < v.size()) {
		acc.push_back(v[iv]);
		shuffle_rec(u, iu, v, iv + 1, acc, out);
		acc.pop_back();
	}
}

/// Enumerate all k-subsets of {1..n} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const Letters&)>& fn)
{
	Letters sel(k);
	for (int i = 0; i < k; ++i)
		sel[i] = i + 1;
	while (true) {
		fn(sel);
		int i = k - 1;
		while (i >= 0 && sel[i] == n - (k - 1 - i))
			--i;
		if (i < 0)
			break;
		++sel[i];
		for (int j = i + 1; j < k; ++j)
			sel[j] = sel[j - 1] + 1;
	}
}

} // namespace

std::vector<Word> shuffle(const Word& u, const Word& v)
{
	std::set<int> seen(u.letters().begin(), u.letters().end());
	for (int x : v.letters())
		if (seen.count(x))
			throw std::invalid_argument("shuffle: words share letter " + std::to_string(x));

	std::vector<Word> out;
	Letters acc;
	acc.reserve(u.size() + v.size());
	shuffle_rec(u.letters(), 0, v.letters(), 0, acc, out);
	std::sort(out.begin(), out.end());
	return out;
}

PermCombination star_prime(const Permutation& sigma, const Permutation& tau)
{
	PermCombination out;
	for (const Word& w : shuffle(sigma.as_word(), shift(tau, sigma.grade())))
		out.add(Permutation(w.letters()), Rational(1));
	return out;
}

PermCombination star(const Permutation& sigma, const Permutation& tau)
{
	const int k = sigma.grade();
	const int l = tau.grade();
	PermCombination out;
	for_each_subset(k + l, k, [&](const Letters& sel) {
		Letters comp;
		comp.reserve(l);
		for (int x = 1, j = 0; x <= k + l; ++x) {
			if (j < k && sel[j] == x)
				++j;
			else
				comp.push_back(x);
		}
		Letters img(k + l);
		for (int i = 0; i < k; ++i)
			img[i] = sel[sigma(i + 1) - 1];
		for (int i = 0; i < l; ++i)
			img[k + i] = comp[tau(i + 1) - 1];
		out.add(Permutation(std::move(img)), Rational(1));
	});
	return out;
}

PermCombination star_prime(const HopfElement& x, const HopfElement& y)
{
	PermCombination out;
	for (const auto& [p, cp] : x.terms())
		for (const auto& [q, cq] : y.terms())
			out.add_scaled(star_prime(p, q), cp * cq);
	return out;
}

PermCombination star(const HopfElement& x, const HopfElement& y)
{
	PermCombination out;
	for (const auto& [p, cp] : x.terms())
		for (const auto& [q, cq] : y.terms())
			out.add_scaled(star(p, q), cp * cq);
	return out;
}

TensorCombination coproduct_prime(const Permutation& alpha)
{
	const Letters& ls = alpha.image();
	TensorCombination out;
	for (size_t i = 0; i <= ls.size(); ++i) {
		Word prefix(Letters(ls.begin(), ls.begin() + i));
		Word suffix(Letters(ls.begin() + i, ls.end()));
		out.add({standardize(prefix), standardize(suffix)}, Rational(1));
	}
	return out;
}

TensorCombination coproduct(const Permutation& alpha)
{
	const int n = alpha.grade();
	TensorCombination out;
	for (int i = 0; i <= n; ++i) {
		Letters left, right;
		for (int v : alpha.image())
			(v <= i ? left : right).push_back(v);
		// left holds exactly {1..i}, already a permutation
		out.add({Permutation(std::move(left)), standardize(Word(std::move(right)))},
		        Rational(1));
	}
	return out;
}

TensorCombination coproduct_prime(const HopfElement& x)
{
	TensorCombination out;
	for (const auto& [p, c] : x.terms())
		out.add_scaled(coproduct_prime(p), c);
	return out;
}

TensorCombination coproduct(const HopfElement& x)
{
	TensorCombination out;
	for (const auto& [p, c] : x.terms())
		out.add_scaled(coproduct(p), c);
	return out;
}

Rational counit(const HopfElement& x) { return x.coefficient(Permutation()); }

Rational pairing(const HopfElement& x, const HopfElement& y)
{
	const HopfElement& small = x.term_count() <= y.term_count() ? x : y;
	const HopfElement& big = x.term_count() <= y.term_count() ? y : x;
	Rational out;
	for (const auto& [p, c] : small.terms())
		out += c * big.coefficient(p);
	return out;
}

Rational pairing(const TensorCombination& x, const TensorCombination& y)
{
	const TensorCombination& small = x.term_count() <= y.term_count() ? x : y;
	const TensorCombination& big = x.term_count() <= y.term_count() ? y : x;
	Rational out;
	for (const auto& [p, c] : small.terms())
		out += c * big.coefficient(p);
	return out;
}

HopfElement theta(const HopfElement& x)
{
	HopfElement out;
	for (const auto& [p, c] : x.terms())
		out.add(p.inverse(), c);
	return out;
}

TensorCombination theta(const TensorCombination& x)
{
	TensorCombination out;
	for (const auto& [pq, c] : x.terms())
		out.add({pq.first.inverse(), pq.second.inverse()}, c);
	return out;
}

// ---------------------------------------------------------------------------
// Axiom suite

namespace {

using Triple = std::array<Permutation, 3>;
using TripleCombination = Combination<Triple>;

using Product = PermCombination (*)(const Permutation&, const Permutation&);
using ProductLin = PermCombination (*)(const HopfElement&, const HopfElement&);
using Coproduct = TensorCombination (*)(const Permutation&);

TensorCombination tensor_star(const TensorCombination& a, const TensorCombination& b,
                              ProductLin prod)
{
	TensorCombination out;
	for (const auto& [uv, c] : a.terms())
		for (const auto& [st, d] : b.terms()) {
			PermCombination lhs =
			    prod(HopfElement::single(uv.first), HopfElement::single(st.first));
			PermCombination rhs =
			    prod(HopfElement::single(uv.second), HopfElement::single(st.second));
			Rational cd = c * d;
			for (const auto& [p, cp] : lhs.terms())
				for (const auto& [q, cq] : rhs.terms())
					out.add({p, q}, cd * cp * cq);
		}
	return out;
}

TripleCombination coproduct_left(const TensorCombination& t, Coproduct delta)
{
	TripleCombination out;
	for (const auto& [uv, c] : t.terms())
		for (const auto& [ab, d] : delta(uv.first).terms())
			out.add({ab.first, ab.second, uv.second}, c * d);
	return out;
}

TripleCombination coproduct_right(const TensorCombination& t, Coproduct delta)
{
	TripleCombination out;
	for (const auto& [uv, c] : t.terms())
		for (const auto& [ab, d] : delta(uv.second).terms())
			out.add({uv.first, ab.first, ab.second}, c * d);
	return out;
}

Permutation random_permutation(int n, CounterRng& rng)
{
	Letters img(n);
	for (int i = 0; i < n; ++i)
		img[i] = i + 1;
	for (int i = n - 1; i > 0; --i)
		std::swap(img[i], img[rng.next_below(i + 1)]);
	return Permutation(std::move(img));
}

std::string describe_pair(const Permutation& a, const Permutation& b)
{
	return a.str() + ", " + b.str();
}

struct Checker {
	int max_grade;
	uint64_t seed;
	std::vector<IdentityResult> results;

	/// Runs `check` exhaustively on grade tuples with sum <= cap, then on
	/// randomized tuples for sums in (cap, max_grade].
	void run_tuples(const std::string& name, int cap, int arity,
	                const std::function<bool(const std::vector<Permutation>&,
	                                         std::string&)>& check)
	{
		IdentityResult res;
		res.name = name;
		res.exhaustive_grade = std::min(cap, max_grade);

		std::vector<std::vector<Permutation>> pool(res.exhaustive_grade + 1);
		for (int g = 0; g <= res.exhaustive_grade; ++g)
			pool[g] = all_permutations(g);

		std::function<void(std::vector<Permutation>&, int, int)> rec =
		    [&](std::vector<Permutation>& tuple, int pos, int budget) {
			    if (!res.pass)
				    return;
			    if (pos == arity) {
				    std::string why;
				    ++res.cases;
				    if (!check(tuple, why)) {
					    res.pass = false;
					    res.counterexample = why;
				    }
				    return;
			    }
			    for (int g = 0; g <= budget; ++g)
				    for (const Permutation& p : pool[g]) {
					    tuple[pos] = p;
					    rec(tuple, pos + 1, budget - g);
					    if (!res.pass)
						    return;
				    }
		    };
		std::vector<Permutation> tuple(arity);
		rec(tuple, 0, res.exhaustive_grade);

		// beyond the exhaustive cap: seeded spot checks
		CounterRng rng(CounterRng::substream(seed, std::hash<std::string>{}(name)));
		for (int total = res.exhaustive_grade + 1; total <= max_grade && res.pass; ++total) {
			for (int trial = 0; trial < 48 && res.pass; ++trial) {
				std::vector<Permutation> tuple2(arity);
				int left = total;
				for (int a = 0; a < arity; ++a) {
					int g = (a + 1 == arity) ? left
					                         : static_cast<int>(rng.next_below(left + 1));
					tuple2[a] = random_permutation(g, rng);
					left -= g;
				}
				std::string why;
				++res.cases;
				if (!check(tuple2, why)) {
					res.pass = false;
					res.counterexample = why;
				}
			}
		}
		results.push_back(std::move(res));
	}
};

} // namespace

HopfCheckReport run_hopf_checks(int max_grade, HopfStructure structure, uint64_t seed)
{
	HopfCheckReport report;
	report.max_grade = max_grade;
	report.structure = structure;
	report.seed = seed;

	Checker ck{max_grade, seed, {}};
	const bool do_star = structure != HopfStructure::StarPrime;
	const bool do_prime = structure != HopfStructure::Star;

	struct ProductOps {
		std::string tag;
		Product prod;
		ProductLin prod_lin;
		Coproduct delta;
	};
	std::vector<ProductOps> ops;
	if (do_star)
		ops.push_back({"star", &star, &star, &coproduct});
	if (do_prime)
		ops.push_back({"starprime", &star_prime, &star_prime, &coproduct_prime});

	for (const auto& op : ops) {
		ck.run_tuples("associativity_" + op.tag, 6, 3,
		              [&](const std::vector<Permutation>& t, std::string& why) {
			              PermCombination lhs = op.prod_lin(op.prod(t[0], t[1]),
			                                                HopfElement::single(t[2]));
			              PermCombination rhs = op.prod_lin(HopfElement::single(t[0]),
			                                                op.prod(t[1], t[2]));
			              if (lhs == rhs)
				              return true;
			              why = t[0].str() + ", " + t[1].str() + ", " + t[2].str();
			              return false;
		              });

		ck.run_tuples("unit_" + op.tag, 6, 1,
		              [&](const std::vector<Permutation>& t, std::string& why) {
			              Permutation e;
			              PermCombination left = op.prod(e, t[0]);
			              PermCombination right = op.prod(t[0], e);
			              PermCombination self = PermCombination::single(t[0]);
			              if (left == self && right == self)
				              return true;
			              why = t[0].str();
			              return false;
		              });

		const std::string delta_tag = op.tag == "star" ? "delta" : "deltaprime";

		ck.run_tuples("coassociativity_" + delta_tag, 5, 1,
		              [&](const std::vector<Permutation>& t, std::string& why) {
			              TensorCombination d = op.delta(t[0]);
			              if (coproduct_left(d, op.delta) == coproduct_right(d, op.delta))
				              return true;
			              why = t[0].str();
			              return false;
		              });

		ck.run_tuples("counit_" + delta_tag, 5, 1,
		              [&](const std::vector<Permutation>& t, std::string& why) {
			              HopfElement left, right;
			              for (const auto& [uv, c] : op.delta(t[0]).terms()) {
				              left.add(uv.second,
				                       c * (uv.first.empty() ? Rational(1) : Rational(0)));
				              right.add(uv.first,
				                        c * (uv.second.empty() ? Rational(1) : Rational(0)));
			              }
			              HopfElement self = HopfElement::single(t[0]);
			              if (left == self && right == self)
				              return true;
			              why = t[0].str();
			              return false;
		              });

		ck.run_tuples("bialgebra_" + op.tag + "_" + delta_tag, 4, 2,
		              [&](const std::vector<Permutation>& t, std::string& why) {
			              TensorCombination lhs;
			              for (const auto& [p, c] : op.prod(t[0], t[1]).terms())
				              lhs.add_scaled(op.delta(p), c);
			              TensorCombination rhs =
			                  tensor_star(op.delta(t[0]), op.delta(t[1]), op.prod_lin);
			              if (lhs == rhs)
				              return true;
			              why = describe_pair(t[0], t[1]);
			              return false;
		              });
	}

	if (do_star && do_prime) {
		ck.run_tuples("conjugation_product", 6, 2,
		              [&](const std::vector<Permutation>& t, std::string& why) {
			              PermCombination lhs = star(t[0], t[1]);
			              PermCombination rhs =
			                  theta(star_prime(t[0].inverse(), t[1].inverse()));
			              if (lhs == rhs)
				              return true;
			              why = describe_pair(t[0], t[1]);
			              return false;
		              });

		ck.run_tuples("conjugation_coproduct", 5, 1,
		              [&](const std::vector<Permutation>& t, std::string& why) {
			              TensorCombination lhs = coproduct(t[0]);
			              TensorCombination rhs = theta(coproduct_prime(t[0].inverse()));
			              if (lhs == rhs)
				              return true;
			              why = t[0].str();
			              return false;
		              });

		// Which product is adjoint to which coproduct under the orthonormal
		// pairing? Probe both orientations on every split of every grade.
		IdentityResult res;
		res.name = "duality_orientation";
		res.exhaustive_grade = std::min(4, max_grade);
		bool star_deltaprime = true;
		bool starprime_delta = true;
		bool star_delta = true;
		bool starprime_deltaprime = true;
		for (int n = 0; n <= res.exhaustive_grade; ++n) {
			for (int k = 0; k <= n; ++k) {
				auto sigmas = all_permutations(k);
				auto taus = all_permutations(n - k);
				auto rhos = all_permutations(n);
				for (const auto& s : sigmas)
					for (const auto& t : taus) {
						PermCombination st = star(s, t);
						PermCombination sp = star_prime(s, t);
						TensorCombination stt = TensorCombination::single({s, t});
						for (const auto& r : rhos) {
							++res.cases;
							Rational lhs1 = st.coefficient(r);
							Rational lhs2 = sp.coefficient(r);
							Rational rhs_dp = pairing(stt, coproduct_prime(r));
							Rational rhs_d = pairing(stt, coproduct(r));
							star_deltaprime &= lhs1 == rhs_dp;
							starprime_delta &= lhs2 == rhs_d;
							star_delta &= lhs1 == rhs_d;
							starprime_deltaprime &= lhs2 == rhs_dp;
						}
					}
			}
		}
		res.pass = (star_deltaprime && starprime_delta) || (star_delta && starprime_deltaprime);
		std::ostringstream detail;
		detail << "star~deltaprime:" << (star_deltaprime ? "holds" : "fails")
		       << " starprime~delta:" << (starprime_delta ? "holds" : "fails")
		       << " star~delta:" << (star_delta ? "holds" : "fails")
		       << " starprime~deltaprime:" << (starprime_deltaprime ? "holds" : "fails");
		res.detail = detail.str();
		if (!res.pass)
			res.counterexample = "no orientation consistent across grades <= " +
			                     std::to_string(res.exhaustive_grade);
		ck.results.push_back(std::move(res));
	}

	report.identities = std::move(ck.results);
	return report;
}

} // namespace magnus
