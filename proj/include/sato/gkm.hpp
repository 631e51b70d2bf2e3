#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "sato/graded_poly.hpp"
#include "sato/partition.hpp"
#include "sato/schubert.hpp"

namespace sato {

/// Sorted l-subset of {1..n}.
using Subset = std::vector<int>;

/// One-dimensional orbit between two fixed points: `from` contains `out`,
/// `to` is obtained by exchanging `out` for `in`. Label u_out - u_in.
struct GKMEdge {
  std::size_t from;
  std::size_t to;
  int out;
  int in;
};

/// GKM graph of the finite Grassmannian Gr(l, n) under the diagonal torus.
///
/// Fixed points are l-subsets S = {a_1 < ... < a_l}; S corresponds to the
/// partition lambda_k = a_{l+1-k} - (l+1-k) inside the l x (n-l) box, so
/// {1..l} is the empty partition. On the infinite Grassmannian this is the
/// window of the characteristic sequence: S maps to s_i = a_{l+1-i} - l - 1 + d
/// for i <= l, followed by the standard tail s_i = -i + d.
class GKMGraph {
 public:
  GKMGraph(int n, int l);

  int n() const { return n_; }
  int l() const { return l_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<Subset>& vertices() const { return vertices_; }
  const std::vector<GKMEdge>& edges() const { return edges_; }
  /// Edges incident to vertex v (indices into edges()).
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_[v]; }

  std::size_t index_of(const Subset& s) const;
  const Partition& partition_of(std::size_t v) const { return partitions_[v]; }
  std::size_t vertex_of(const Partition& lambda) const;
  bool in_box(const Partition& lambda) const { return lambda.fits_in_box(l_, n_ - l_); }
  MayaSequence maya_of(std::size_t v, long d = 0) const;

  /// Vertex indices sorted by partition size, then PartitionOrder.
  const std::vector<std::size_t>& bruhat_order() const { return order_; }

  /// u_1 .. u_n, each of weight 1.
  const TablePtr& torus_table() const { return torus_; }
  /// The single rotation variable u.
  const TablePtr& rotation_table() const { return rotation_; }

 private:
  int n_;
  int l_;
  std::vector<Subset> vertices_;
  std::vector<Partition> partitions_;
  std::vector<GKMEdge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::size_t> order_;
  TablePtr torus_;
  TablePtr rotation_;
};

using GraphPtr = std::shared_ptr<const GKMGraph>;

GraphPtr make_gkm_graph(int n, int l);

/// Function from fixed points to polynomials, either in u_1..u_n (full
/// torus) or in the single variable u (rotation circle u_i -> i u).
class GKMClass {
 public:
  GKMClass(GraphPtr graph, bool rotated, std::vector<GradedPoly> values);

  static GKMClass constant(GraphPtr graph, const Rational& c, bool rotated = false);

  const GKMGraph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  bool rotated() const { return rotated_; }
  const TablePtr& table() const;
  const std::vector<GradedPoly>& values() const { return values_; }
  const GradedPoly& value(std::size_t v) const { return values_.at(v); }

  /// Weight of the orbit: u_out - u_in, or (out - in) u after rotation.
  GradedPoly edge_label(const GKMEdge& e) const;

  friend bool operator==(const GKMClass& a, const GKMClass& b);

 private:
  GraphPtr graph_;
  bool rotated_;
  std::vector<GradedPoly> values_;
};

/// Equivariant Schubert class of lambda: supported on fixed points whose
/// partition contains lambda, homogeneous of degree |lambda|, and equal to
/// prod (u_a - u_b) over the down-edges at the fixed point of lambda.
/// Evaluated through factorial Schur functions. Throws DomainError when
/// lambda does not fit in the box.
GKMClass equivariant_schubert(const GraphPtr& graph, const Partition& lambda);

/// Same class computed by solving the defining conditions as an exact linear
/// system, fixed point by fixed point in Bruhat order.
GKMClass equivariant_schubert_by_solve(const GraphPtr& graph, const Partition& lambda);

/// Value of the equivariant Schubert class at its own fixed point.
GradedPoly schubert_normalization(const GKMGraph& graph, const Partition& lambda);

/// Edges along which the difference of values is not divisible by the label.
std::vector<GKMEdge> gkm_check(const GKMClass& c);

GKMClass pointwise_product(const GKMClass& a, const GKMClass& b);

/// u_i -> i u.
GKMClass specialize_rotation(const GKMClass& c);

/// Equivariant Schubert classes of every box partition, indexed by vertex.
std::vector<GKMClass> schubert_basis(const GraphPtr& graph);

/// Forgetful map to ordinary cohomology of Gr(l, n): the class is expanded in
/// the equivariant Schubert basis over the polynomial ring (triangular
/// solve in Bruhat order, exact division by the normalizations), then every
/// coefficient is evaluated at u = 0. Throws InternalError when the class is
/// not a polynomial combination of Schubert classes.
SchubertClass specialize_ordinary(const GKMClass& c, long d = 0);
SchubertClass specialize_ordinary(const GKMClass& c, const std::vector<GKMClass>& basis, long d = 0);

/// Exact quotient p / linear for a linear form; nullopt if not divisible.
std::optional<GradedPoly> divide_by_linear(const GradedPoly& p, const GradedPoly& linear);

}  // namespace sato
