#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sato/graded_poly.hpp"
#include "sato/power_series.hpp"
#include "sato/rational.hpp"

namespace sato {

enum class Flavor { moduli_q, kappa, linebundle, mumford_morita };

/// Rank of the bundle of holomorphic q-differentials: g for q = 1 and
/// (2q-1)(g-1) for q >= 2.
int hodge_rank(int g, int q);

/// Free graded polynomial ring of tautological classes. The only relation
/// is rank vanishing: lambda_j = 0 for j > rank and P_j = 0 for j > d,
/// which is built in by leaving those generators out of the table.
class TautRing {
 public:
  /// psi and lambda_1 .. lambda_{hodge_rank(g, q)}.
  static TautRing moduli(int g, int q, std::optional<unsigned> cap = std::nullopt);
  /// kappa_0 .. kappa_{max_index}, kappa_r of weight r.
  static TautRing kappa(unsigned max_index, std::optional<unsigned> cap = std::nullopt);
  /// omega and P_1 .. P_d with d = h - g + 1; requires h > 2g - 2.
  static TautRing linebundle(int g, int h, std::optional<unsigned> cap = std::nullopt);
  /// m_{i,j} of weight i + j - 1 for 1 <= i + j <= max_weight + 1.
  static TautRing mumford_morita(unsigned max_weight, std::optional<unsigned> cap = std::nullopt);

  Flavor flavor() const { return flavor_; }
  int g() const { return g_; }
  int q() const { return q_; }
  int h() const { return h_; }
  /// Rank bound of the lambda / P generators (0 for other flavors).
  int rank() const { return rank_; }
  const TablePtr& table() const { return table_; }
  std::optional<unsigned> degree_cap() const { return cap_; }

  GradedPoly zero() const { return GradedPoly(table_, cap_); }
  GradedPoly constant(const Rational& c) const { return GradedPoly::constant(table_, c, cap_); }
  GradedPoly one() const { return constant(Rational(1)); }

  GradedPoly psi() const;
  /// lambda_0 = 1; zero above the rank.
  GradedPoly lambda(int j) const;
  GradedPoly kappa(int r) const;
  GradedPoly omega() const;
  /// P_0 = 1; zero above the rank.
  GradedPoly P(int j) const;
  GradedPoly m(int i, int j) const;

 private:
  TautRing(Flavor flavor, TablePtr table, std::optional<unsigned> cap)
      : flavor_(flavor), table_(std::move(table)), cap_(cap) {}
  GradedPoly named(const std::string& name) const;

  Flavor flavor_;
  TablePtr table_;
  std::optional<unsigned> cap_;
  int g_ = 0;
  int q_ = 0;
  int h_ = 0;
  int rank_ = 0;
};

/// B_n = n! [x^n] x / (e^x - 1); so B_1 = -1/2. Thread-safe memoized.
Rational bernoulli_number(unsigned n);

/// Coefficients (in x, ascending) of B_n(x) from t e^{xt} / (e^t - 1).
std::vector<Rational> bernoulli_poly(unsigned n);
Rational bernoulli_poly_value(unsigned n, const Rational& x);

/// ch_r of the Hodge bundle E_q: B_{r+1}(q) / (r+1)! * kappa_r, in
/// `ring` (kappa flavor). With assign_kappa0, kappa_0 takes the value 2g-2.
GradedPoly ch_hodge(int r, int q, int g, const TautRing& ring, bool assign_kappa0 = false);
GradedPoly ch_hodge(int r, int q, int g, bool assign_kappa0 = false);

/// Chern classes (c_1..c_N) or Chern character components (ch_1..ch_N);
/// components[k-1] has weight k.
struct ChernData {
  enum class Kind { chern, character };
  Kind kind;
  long rank;
  std::vector<GradedPoly> components;
};

/// Newton identities, truncated at the number of components given.
ChernData chern_from_ch(const ChernData& ch);
ChernData ch_from_chern(const ChernData& c);

/// Td = -omega / (1 - e^omega) through omega^order.
PowerSeries todd_series(unsigned order);

/// ch_k of the section bundle by Grothendieck-Riemann-Roch: the weight-(k+1)
/// part of e^gamma * Td(omega), with gamma^i omega^j pushed to m_{i,j}.
GradedPoly grr_ch_P(int k, const TautRing& ring);
GradedPoly grr_ch_P(int k);

/// The closed formula
///   m_{k+1,0}/(k+1)! - m_{k,1}/(2 k!) + sum_{j=1}^{floor(k/2)} B_{2j}/((2j)!(k-2j)!) m_{k+1-2j,2j}.
GradedPoly ch_P_stated(int k, const TautRing& ring);
GradedPoly ch_P_stated(int k);

struct ChPDelta {
  enum class Kind {
    omitted_boundary_term,  // present in the expansion, absent from the closed formula
    denominator_mismatch,   // both present; (k+1-2j)! against (k-2j)!
    other,
  };
  int i;
  int j;
  Rational expansion;  // grr_ch_P coefficient
  Rational stated;     // ch_P_stated coefficient
  Kind kind;

  Rational delta() const { return expansion - stated; }
};

/// Monomial-by-monomial difference grr_ch_P(k) - ch_P_stated(k).
std::vector<ChPDelta> compare_ch_P(int k);

std::string to_string(ChPDelta::Kind kind);

}  // namespace sato
