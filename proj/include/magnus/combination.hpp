#pragma once

#include <map>
#include <optional>
#include <utility>

#include "magnus/permutation.hpp"
#include "magnus/rational.hpp"

namespace magnus {

/// Formal rational-linear combination over an ordered key type. Zero
/// coefficients are never stored, so structural equality of the term map is
/// equality of combinations. Iteration order is the key order, which makes
/// every emitted form canonical.
template <class Key>
class Combination {
public:
	using Terms = std::map<Key, Rational>;

	Combination() = default;

	static Combination single(Key k, Rational c = Rational(1))
	{
		Combination out;
		out.add(std::move(k), std::move(c));
		return out;
	}

	void add(Key k, Rational c)
	{
		if (c.is_zero())
			return;
		auto [it, inserted] = terms_.try_emplace(std::move(k), std::move(c));
		if (!inserted) {
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}

	void add_scaled(const Combination& o, const Rational& s)
	{
		if (s.is_zero())
			return;
		for (const auto& [k, c] : o.terms_)
			add(k, c * s);
	}

	Combination& operator+=(const Combination& o)
	{
		for (const auto& [k, c] : o.terms_)
			add(k, c);
		return *this;
	}

	Combination& operator-=(const Combination& o)
	{
		for (const auto& [k, c] : o.terms_)
			add(k, -c);
		return *this;
	}

	friend Combination operator+(Combination a, const Combination& b) { return a += b; }
	friend Combination operator-(Combination a, const Combination& b) { return a -= b; }

	Combination operator-() const
	{
		Combination out;
		for (const auto& [k, c] : terms_)
			out.terms_.emplace(k, -c);
		return out;
	}

	Combination scaled(const Rational& s) const
	{
		Combination out;
		if (s.is_zero())
			return out;
		for (const auto& [k, c] : terms_)
			out.terms_.emplace(k, c * s);
		return out;
	}

	/// Coefficient of k, zero if absent.
	Rational coefficient(const Key& k) const
	{
		auto it = terms_.find(k);
		return it == terms_.end() ? Rational(0) : it->second;
	}

	bool contains(const Key& k) const { return terms_.count(k) != 0; }
	size_t term_count() const { return terms_.size(); }
	bool empty() const { return terms_.empty(); }
	const Terms& terms() const { return terms_; }

	friend bool operator==(const Combination&, const Combination&) = default;

private:
	Terms terms_;
};

/// Mixed grades allowed; both Hopf products distribute gradewise.
using HopfElement = Combination<Permutation>;

/// Graded combination of permutations; homogeneity is checked where an
/// operation requires it rather than enforced by the type.
using PermCombination = Combination<Permutation>;

using PermPair = std::pair<Permutation, Permutation>;

/// Two-slot tensors st(u) (x) st(v) with rational coefficients.
using TensorCombination = Combination<PermPair>;

/// Grade shared by every key, nullopt for mixed grades or the empty
/// combination.
inline std::optional<int> homogeneous_grade(const PermCombination& x)
{
	std::optional<int> g;
	for (const auto& [p, c] : x.terms()) {
		if (!g)
			g = p.grade();
		else if (*g != p.grade())
			return std::nullopt;
	}
	return g;
}

} // namespace magnus
