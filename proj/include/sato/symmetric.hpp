#pragma once

#include <map>
#include <vector>

#include "sato/graded_poly.hpp"
#include "sato/partition.hpp"
#include "sato/rational.hpp"

namespace sato {

/// Finite list of rational values; repeated values and zeros are allowed.
using Alphabet = std::vector<Rational>;

/// Littlewood-Richardson multiplicities c^nu_{lambda,mu}, canonically ordered.
using LRResult = std::map<Partition, long, PartitionOrder>;

/// m-th complete homogeneous symmetric function. h_0 = 1 on every alphabet.
Rational eval_h(unsigned m, const Alphabet& a);
/// m-th elementary symmetric function; zero when m exceeds the alphabet size.
Rational eval_e(unsigned m, const Alphabet& a);

/// Coefficients of prod_i (1 + a_i x)^{-1} through x^order, obtained by
/// inverting the product as a power series.
std::vector<Rational> cauchy_coeffs(const Alphabet& a, unsigned order);

/// Structure constants of the Schur basis, by enumeration of
/// Littlewood-Richardson skew tableaux of shape nu/lambda and content mu.
LRResult lr_coefficients(const Partition& lambda, const Partition& mu);

/// Table e_1 .. e_n (weights 1..n) under the given name prefix.
TablePtr elementary_table(unsigned n, const std::string& prefix = "e_");

/// s_lambda = det(e_{lambda'_i - i + j}) in the generators of `table`, which
/// must hold at least lambda_1 ... |lambda| generators named as by
/// elementary_table; generator r stands for e_{r}.
GradedPoly dual_jacobi_trudi(const Partition& lambda, const TablePtr& table);
/// Same, over a fresh e-table of size |lambda|.
GradedPoly dual_jacobi_trudi(const Partition& lambda);

}  // namespace sato
