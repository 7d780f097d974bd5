#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "magnus/combination.hpp"

namespace magnus {

/// All interleavings of u and v preserving the internal order of each.
/// The letter sets must be disjoint. C(|u|+|v|, |u|) words, lexicographically
/// sorted.
std::vector<Word> shuffle(const Word& u, const Word& v);

/// sigma *' tau = sigma shuffled with tau shifted up by grade(sigma).
PermCombination star_prime(const Permutation& sigma, const Permutation& tau);

/// sigma * tau = sum of concatenations uv with st(u) = sigma, st(v) = tau and
/// uv a permutation of grade k + l.
PermCombination star(const Permutation& sigma, const Permutation& tau);

/// Bilinear extensions; mixed-grade inputs distribute gradewise.
PermCombination star_prime(const HopfElement& x, const HopfElement& y);
PermCombination star(const HopfElement& x, const HopfElement& y);

/// delta'(alpha) = sum over concatenation factorizations st(u) (x) st(v).
TensorCombination coproduct_prime(const Permutation& alpha);

/// delta(alpha) = sum_i alpha|{1..i} (x) st(alpha|{i+1..n}).
TensorCombination coproduct(const Permutation& alpha);

TensorCombination coproduct_prime(const HopfElement& x);
TensorCombination coproduct(const HopfElement& x);

/// Coefficient of the empty permutation.
Rational counit(const HopfElement& x);

/// The permutation basis is orthonormal; extends bilinearly.
Rational pairing(const HopfElement& x, const HopfElement& y);
Rational pairing(const TensorCombination& x, const TensorCombination& y);

/// The linear involution sending each permutation to its inverse.
HopfElement theta(const HopfElement& x);
TensorCombination theta(const TensorCombination& x);

// ---------------------------------------------------------------------------
// Axiom checking. Each identity is verified exhaustively up to its grade cap
// (caps chosen so the full run takes seconds); when asked for larger grades,
// randomized tuples are sampled with the given seed.

enum class HopfStructure { Star, StarPrime, Both };

struct IdentityResult {
	std::string name;
	int exhaustive_grade = 0; ///< grade (sum) actually covered exhaustively
	long cases = 0;
	bool pass = true;
	std::string counterexample; ///< empty when pass
	std::string detail;         ///< extra info (e.g. duality orientation)
};

struct HopfCheckReport {
	int max_grade = 0;
	HopfStructure structure = HopfStructure::Both;
	uint64_t seed = 0;
	std::vector<IdentityResult> identities;
	bool all_pass() const
	{
		for (const auto& r : identities)
			if (!r.pass)
				return false;
		return true;
	}
};

/// Runs the axiom suite: associativity, unit, coassociativity, counit,
/// bialgebra compatibility, the theta-conjugation identities, and the
/// duality-orientation probe.
HopfCheckReport run_hopf_checks(int max_grade, HopfStructure structure, uint64_t seed);

} // namespace magnus
