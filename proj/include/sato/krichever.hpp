#pragma once

#include "sato/graded_poly.hpp"
#include "sato/schubert.hpp"
#include "sato/tautological.hpp"

namespace sato {

enum class MapKind { kq, k1, line };

/// One of the Krichever maps into the Sato Grassmannian, pulled back to
/// (equivariant) cohomology of the moduli space.
///
///   kq:   q-differentials, q >= 2, target generators psi, lambda_j (rank d_q)
///   k1:   abelian differentials, target psi, lambda_j (rank g)
///   line: sections of a degree-h line bundle, h > 2g-2, target omega, P_j (rank h-g+1)
///
/// Equivariant maps send the rotation generator u to -psi (kq, k1) or -omega (line).
struct PullbackMap {
  MapKind kind = MapKind::k1;
  int g = 2;
  int q = 1;
  int h = 0;
  bool equivariant = false;
  /// Reads the r > d_q formula for kq with an inner (-1)^m like its siblings.
  bool kq_alternate_sign = false;

  static PullbackMap make_kq(int q, int g, bool equivariant = false);
  static PullbackMap make_k1(int g, bool equivariant = false);
  static PullbackMap make_line(int g, int h, bool equivariant = false);

  /// Throws DomainError on invalid parameters.
  void validate() const;
  /// d_q, g or d = h - g + 1.
  int rank() const;
  TautRing target_ring() const;
  PullbackMap as_equivariant(bool on) const;
};

/// Image of C_r (equivariant) or c_r (ordinary), r >= 1, in target_ring().
GradedPoly pullback_generator(const PullbackMap& map, int r);

/// C_1 .. C_n and u, the generators of equivariant cohomology of Gr_d.
TablePtr equivariant_source_table(unsigned n);

/// Ring-homomorphism extension. Ordinary maps accept any Schur-basis class
/// or a polynomial in c_r; equivariant maps accept polynomials in C_r and u,
/// or Schur-basis classes whose support is only column partitions (1^r).
GradedPoly pullback_class(const PullbackMap& map, const SchubertClass& x);
GradedPoly pullback_class(const PullbackMap& map, const GradedPoly& x);

/// Whether psi -> 0 (omega -> 0) in the equivariant image of C_r yields the
/// ordinary image of c_r.
bool equivariant_limit_check(const PullbackMap& map, int r);

}  // namespace sato
