#pragma once

#include <map>

#include "sato/graded_poly.hpp"
#include "sato/partition.hpp"
#include "sato/rational.hpp"

namespace sato {

/// Element of H*(Gr_d) written in the Schubert (Schur) basis. The index d
/// only matters for characteristic-sequence encodings; the ring structure
/// is the full ring of symmetric functions, with no box truncation.
class SchubertClass {
 public:
  using TermMap = std::map<Partition, Rational, PartitionOrder>;

  explicit SchubertClass(long d = 0) : d_(d) {}
  SchubertClass(long d, TermMap terms);

  static SchubertClass unit(long d = 0) { return basis(Partition{}, d); }
  static SchubertClass basis(const Partition& lambda, long d = 0);

  long d() const { return d_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Partition& lambda) const;
  /// Largest |lambda| in the support; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  SchubertClass homogeneous_part(int k) const;
  /// Drops partitions not fitting in a rows x cols box.
  SchubertClass truncate_to_box(int rows, int cols) const;

  void add_term(const Partition& lambda, const Rational& c);

  SchubertClass& operator+=(const SchubertClass& o);
  SchubertClass& operator-=(const SchubertClass& o);
  SchubertClass& operator*=(const Rational& c);
  friend SchubertClass operator+(SchubertClass a, const SchubertClass& b) { return a += b; }
  friend SchubertClass operator-(SchubertClass a, const SchubertClass& b) { return a -= b; }
  friend SchubertClass operator*(SchubertClass a, const Rational& c) { return a *= c; }
  friend bool operator==(const SchubertClass&, const SchubertClass&) = default;

  /// "s(2) + s(1,1)"; "0" for zero, "1" for the unit.
  std::string str() const;

 private:
  long d_;
  TermMap terms_;
};

/// Bilinear extension of the Littlewood-Richardson rule. Throws
/// StructuralError when the component indices differ.
SchubertClass schubert_product(const SchubertClass& x, const SchubertClass& y);

/// Table c_1 .. c_n (weights 1..n).
TablePtr c_table(unsigned n);

/// Rewrites x as a polynomial in c_r = sigma_(1^r) via dual Jacobi-Trudi.
/// The table defaults to c_1 .. c_deg(x).
GradedPoly expand_in_generators(const SchubertClass& x);
GradedPoly expand_in_generators(const SchubertClass& x, const TablePtr& table);

/// Inverse direction: evaluates a c-polynomial in the Schubert ring with
/// c_r -> sigma_(1^r) and products by Littlewood-Richardson.
SchubertClass evaluate_c_polynomial(const GradedPoly& p, long d = 0);

}  // namespace sato
