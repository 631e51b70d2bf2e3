#pragma once

#include <map>
#include <vector>

#include "sato/partition.hpp"
#include "sato/rational.hpp"
#include "sato/symmetric.hpp"

// Brute-force reference computations. Nothing here calls the routines it is
// used to check.
namespace sato::oracle {

/// h_m by enumerating every multiset of m letters.
Rational h_by_monomials(unsigned m, const Alphabet& a);
/// e_m by enumerating every m-subset of positions.
Rational e_by_subsets(unsigned m, const Alphabet& a);
/// p_m = sum a_i^m.
Rational power_sum(unsigned m, const Alphabet& a);

/// Littlewood-Richardson coefficients from the product of Schur polynomials
/// in `variables` variables (built from semistandard tableaux), expanded
/// back by repeatedly peeling off the leading dominant monomial.
LRResult lr_by_schur_polynomials(const Partition& lambda, const Partition& mu, unsigned variables);

/// Bernoulli numbers from sum_{k=0}^{n} C(n+1, k) B_k = 0, B_0 = 1.
std::vector<Rational> bernoulli_by_recurrence(unsigned n);

}  // namespace sato::oracle
