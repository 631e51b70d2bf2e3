#include "sato/gkm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "sato/errors.hpp"

namespace sato {

namespace {

void subsets(int n, int l, int start, Subset& cur, std::vector<Subset>& out) {
  if (static_cast<int>(cur.size()) == l) {
    out.push_back(cur);
    return;
  }
  for (int x = start; x <= n - (l - static_cast<int>(cur.size())) + 1; ++x) {
    cur.push_back(x);
    subsets(n, l, x + 1, cur, out);
    cur.pop_back();
  }
}

Partition partition_of_subset(const Subset& s) {
  const int l = static_cast<int>(s.size());
  std::vector<int> parts;
  for (int k = 1; k <= l; ++k) parts.push_back(s[static_cast<std::size_t>(l - k)] - (l + 1 - k));
  return Partition(std::move(parts));
}

// u_a - u_b in the torus table
GradedPoly weight_difference(const TablePtr& table, int a, int b) {
  return GradedPoly::generator(table, static_cast<std::size_t>(a - 1)) -
         GradedPoly::generator(table, static_cast<std::size_t>(b - 1));
}

}  // namespace

GKMGraph::GKMGraph(int n, int l) : n_(n), l_(l) {
  if (n < 1 || l < 0 || l > n) throw DomainError("Gr(l, n) needs 0 <= l <= n and n >= 1");
  Subset cur;
  subsets(n, l, 1, cur, vertices_);
  for (const auto& s : vertices_) partitions_.push_back(partition_of_subset(s));
  incident_.resize(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const Subset& s = vertices_[v];
    for (int out : s) {
      for (int in = out + 1; in <= n; ++in) {
        if (std::binary_search(s.begin(), s.end(), in)) continue;
        Subset t = s;
        *std::find(t.begin(), t.end(), out) = in;
        std::sort(t.begin(), t.end());
        std::size_t w = index_of(t);
        incident_[v].push_back(edges_.size());
        incident_[w].push_back(edges_.size());
        edges_.push_back({v, w, out, in});
      }
    }
  }
  order_.resize(vertices_.size());
  for (std::size_t v = 0; v < order_.size(); ++v) order_[v] = v;
  std::sort(order_.begin(), order_.end(), [this](std::size_t a, std::size_t b) {
    return PartitionOrder{}(partitions_[a], partitions_[b]);
  });
  std::vector<Generator> gens;
  for (int i = 1; i <= n; ++i) gens.push_back({"u_" + std::to_string(i), 1});
  torus_ = make_table(std::move(gens));
  rotation_ = make_table({{"u", 1}});
}

std::size_t GKMGraph::index_of(const Subset& s) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), s);
  if (it == vertices_.end() || *it != s) throw DomainError("not a fixed point of this Grassmannian");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t GKMGraph::vertex_of(const Partition& lambda) const {
  if (!in_box(lambda)) throw DomainError("partition " + lambda.str() + " does not fit in the box");
  Subset s;
  for (int k = l_; k >= 1; --k) s.push_back(lambda.part(static_cast<std::size_t>(k)) + l_ + 1 - k);
  return index_of(s);
}

MayaSequence GKMGraph::maya_of(std::size_t v, long d) const {
  const Subset& s = vertices_.at(v);
  std::vector<long> head;
  for (int i = 1; i <= l_; ++i) head.push_back(s[static_cast<std::size_t>(l_ - i)] - l_ - 1 + d);
  return MayaSequence(d, std::move(head));
}

GraphPtr make_gkm_graph(int n, int l) { return std::make_shared<const GKMGraph>(n, l); }

GKMClass::GKMClass(GraphPtr graph, bool rotated, std::vector<GradedPoly> values)
    : graph_(std::move(graph)), rotated_(rotated), values_(std::move(values)) {
  if (values_.size() != graph_->vertex_count())
    throw StructuralError("GKM class needs one value per fixed point");
  for (const auto& v : values_)
    if (!(v.table() == *table())) throw StructuralError("GKM class values use the wrong variables");
}

GKMClass GKMClass::constant(GraphPtr graph, const Rational& c, bool rotated) {
  const TablePtr& t = rotated ? graph->rotation_table() : graph->torus_table();
  std::vector<GradedPoly> values(graph->vertex_count(), GradedPoly::constant(t, c));
  return GKMClass(std::move(graph), rotated, std::move(values));
}

const TablePtr& GKMClass::table() const {
  return rotated_ ? graph_->rotation_table() : graph_->torus_table();
}

GradedPoly GKMClass::edge_label(const GKMEdge& e) const {
  if (rotated_) return GradedPoly::generator(table(), 0) * Rational(e.out - e.in);
  return weight_difference(table(), e.out, e.in);
}

bool operator==(const GKMClass& a, const GKMClass& b) {
  return (a.graph_ == b.graph_ ||
          (a.graph_->n() == b.graph_->n() && a.graph_->l() == b.graph_->l())) &&
         a.rotated_ == b.rotated_ && a.values_ == b.values_;
}

GradedPoly schubert_normalization(const GKMGraph& graph, const Partition& lambda) {
  const std::size_t v = graph.vertex_of(lambda);
  const Subset& s = graph.vertices()[v];
  GradedPoly out = GradedPoly::constant(graph.torus_table(), Rational(1));
  for (int a : s)
    for (int b = 1; b < a; ++b)
      if (!std::binary_search(s.begin(), s.end(), b)) out = out * weight_difference(graph.torus_table(), a, b);
  return out;
}

GKMClass equivariant_schubert(const GraphPtr& graph, const Partition& lambda) {
  if (!graph->in_box(lambda))
    throw DomainError("partition " + lambda.str() + " does not fit in the " + std::to_string(graph->l()) +
                      "x" + std::to_string(graph->n() - graph->l()) + " box");
  const TablePtr& table = graph->torus_table();
  const int l = graph->l();

  // cells of lambda in row-major order, with their contents
  struct Cell {
    std::size_t row;
    std::size_t col;
    int content;
  };
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.part(r + 1); ++c)
      cells.push_back({r, static_cast<std::size_t>(c), c - static_cast<int>(r)});

  std::vector<GradedPoly> values;
  values.reserve(graph->vertex_count());
  for (std::size_t v = 0; v < graph->vertex_count(); ++v) {
    const Subset& s = graph->vertices()[v];
    // factorial Schur s_lambda(x | u) with x_i = u_{a_i}: sum over semistandard
    // tableaux T of prod over cells (x_{T(cell)} - u_{T(cell) + content}).
    // It vanishes unless lambda is contained in the partition of S.
    if (!graph->partition_of(v).contains(lambda)) {
      values.emplace_back(table);
      continue;
    }
    std::vector<std::vector<int>> tableau(lambda.length());
    for (std::size_t r = 0; r < lambda.length(); ++r) tableau[r].assign(static_cast<std::size_t>(lambda.part(r + 1)), 0);
    GradedPoly total(table);
    std::function<void(std::size_t, const GradedPoly&)> fill = [&](std::size_t k, const GradedPoly& acc) {
      if (acc.is_zero()) return;
      if (k == cells.size()) {
        total += acc;
        return;
      }
      const Cell& cell = cells[k];
      int lo = 1;
      if (cell.col > 0) lo = std::max(lo, tableau[cell.row][cell.col - 1]);
      if (cell.row > 0) lo = std::max(lo, tableau[cell.row - 1][cell.col] + 1);
      for (int t = lo; t <= l; ++t) {
        tableau[cell.row][cell.col] = t;
        int x = s[static_cast<std::size_t>(t - 1)];
        int a = t + cell.content;
        GradedPoly factor = x == a ? GradedPoly(table) : weight_difference(table, x, a);
        fill(k + 1, acc * factor);
      }
      tableau[cell.row][cell.col] = 0;
    };
    fill(0, GradedPoly::constant(table, Rational(1)));
    values.push_back(std::move(total));
  }
  return GKMClass(graph, false, std::move(values));
}

namespace {

// Monomials of total degree k in n variables, lexicographically.
void monomials(std::size_t n, unsigned k, std::size_t i, Exponents& cur, std::vector<Exponents>& out) {
  if (i + 1 == n) {
    cur[i] = k;
    out.push_back(cur);
    cur[i] = 0;
    return;
  }
  for (unsigned e = k + 1; e-- > 0;) {
    cur[i] = e;
    monomials(n, k - e, i + 1, cur, out);
  }
  cur[i] = 0;
}

// Solves A x = b exactly; returns nullopt if inconsistent, throws if the
// solution is not unique.
std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> rows, std::size_t unknowns) {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    Rational inv = Rational(1) / rows[rank][col];
    for (std::size_t j = col; j <= unknowns; ++j) rows[rank][j] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Rational f = rows[r][col];
      for (std::size_t j = col; j <= unknowns; ++j)
        if (!rows[rank][j].is_zero()) rows[r][j] -= f * rows[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (!rows[r][unknowns].is_zero()) return std::nullopt;
  if (rank != unknowns) throw InternalError("GKM conditions do not determine the class uniquely");
  std::vector<Rational> x(unknowns);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = rows[r][unknowns];
  return x;
}

}  // namespace

GKMClass equivariant_schubert_by_solve(const GraphPtr& graph, const Partition& lambda) {
  if (!graph->in_box(lambda)) throw DomainError("partition " + lambda.str() + " does not fit in the box");
  const TablePtr& table = graph->torus_table();
  const std::size_t n = static_cast<std::size_t>(graph->n());
  const unsigned k = static_cast<unsigned>(lambda.size());
  std::vector<GradedPoly> values(graph->vertex_count(), GradedPoly(table));
  values[graph->vertex_of(lambda)] = schubert_normalization(*graph, lambda);

  std::vector<Exponents> basis;
  if (n > 0) {
    Exponents cur(n, 0);
    monomials(n, k, 0, cur, basis);
  }
  std::map<Exponents, std::size_t> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);

  for (std::size_t v : graph->bruhat_order()) {
    const Partition& mu = graph->partition_of(v);
    if (mu == lambda || !mu.contains(lambda)) continue;
    // one equation per down edge and per monomial of f(mu) - f(nu) after u_out := u_in
    std::map<std::pair<std::size_t, Exponents>, std::size_t> row_of;
    std::vector<std::vector<Rational>> rows;
    auto row_for = [&](std::size_t edge, const Exponents& m) -> std::vector<Rational>& {
      auto [it, inserted] = row_of.try_emplace({edge, m}, rows.size());
      if (inserted) rows.emplace_back(basis.size() + 1, Rational(0));
      return rows[it->second];
    };
    for (std::size_t ei : graph->incident(v)) {
      const GKMEdge& e = graph->edges()[ei];
      if (e.to != v) continue;  // down edges arrive at v from smaller fixed points
      const auto out = static_cast<std::size_t>(e.out - 1), in = static_cast<std::size_t>(e.in - 1);
      // at v the exchanged pair is (in in S_v, out not in S_v); substitute u_in := u_out
      for (std::size_t col = 0; col < basis.size(); ++col) {
        Exponents m = basis[col];
        m[out] += m[in];
        m[in] = 0;
        row_for(ei, m)[col] += Rational(1);
      }
      for (const auto& [ex, c] : values[e.from].terms()) {
        Exponents m = ex;
        m[out] += m[in];
        m[in] = 0;
        row_for(ei, m)[basis.size()] += c;
      }
    }
    auto x = solve_unique(std::move(rows), basis.size());
    if (!x) throw InternalError("GKM conditions are inconsistent at " + mu.str());
    GradedPoly f(table);
    for (std::size_t col = 0; col < basis.size(); ++col) f.add_term(basis[col], (*x)[col]);
    values[v] = std::move(f);
  }
  return GKMClass(graph, false, std::move(values));
}

std::optional<GradedPoly> divide_by_linear(const GradedPoly& p, const GradedPoly& linear) {
  const std::size_t n = p.table().size();
  // pick the pivot variable: first one with a nonzero coefficient
  std::optional<std::size_t> pivot;
  Rational pivot_coeff;
  for (const auto& [e, c] : linear.terms()) {
    if (linear.weight(e) != 1) throw StructuralError("divisor is not a linear form");
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] == 1 && (!pivot || i < *pivot)) {
        pivot = i;
        pivot_coeff = c;
      }
  }
  if (!pivot) throw StructuralError("division by zero linear form");
  GradedPoly rest = linear;
  rest.add_term(p.monomial(*pivot), -pivot_coeff);

  // split p by powers of the pivot variable
  std::map<unsigned, GradedPoly> slices;
  unsigned top = 0;
  for (const auto& [e, c] : p.terms()) {
    Exponents stripped = e;
    stripped[*pivot] = 0;
    auto [it, _] = slices.try_emplace(e[*pivot], p.table_ptr(), p.degree_cap());
    it->second.add_term(stripped, c);
    top = std::max(top, e[*pivot]);
  }
  if (p.is_zero()) return p;
  auto slice = [&](unsigned j) {
    auto it = slices.find(j);
    return it == slices.end() ? GradedPoly(p.table_ptr(), p.degree_cap()) : it->second;
  };
  // c q_{j-1} + rest q_j = p_j, solved from the top power down
  Rational inv = Rational(1) / pivot_coeff;
  std::vector<GradedPoly> q(top + 1, GradedPoly(p.table_ptr(), p.degree_cap()));
  GradedPoly carry(p.table_ptr(), p.degree_cap());  // rest * q_j
  for (unsigned j = top; j >= 1; --j) {
    q[j - 1] = (slice(j) - carry) * inv;
    carry = rest * q[j - 1];
  }
  if (!(slice(0) - carry).is_zero()) return std::nullopt;
  GradedPoly out(p.table_ptr(), p.degree_cap());
  for (unsigned j = 0; j < top; ++j)
    for (const auto& [e, c] : q[j].terms()) {
      Exponents m = e;
      m[*pivot] = j;
      out.add_term(m, c);
    }
  return out;
}

std::vector<GKMEdge> gkm_check(const GKMClass& c) {
  std::vector<GKMEdge> bad;
  for (const auto& e : c.graph().edges()) {
    GradedPoly diff = c.value(e.from) - c.value(e.to);
    if (diff.is_zero()) continue;
    if (!divide_by_linear(diff, c.edge_label(e))) bad.push_back(e);
  }
  return bad;
}

GKMClass pointwise_product(const GKMClass& a, const GKMClass& b) {
  if (!(a.graph().n() == b.graph().n() && a.graph().l() == b.graph().l()) || a.rotated() != b.rotated())
    throw StructuralError("GKM classes live on different graphs");
  std::vector<GradedPoly> values;
  values.reserve(a.values().size());
  for (std::size_t v = 0; v < a.values().size(); ++v) values.push_back(a.value(v) * b.value(v));
  return GKMClass(a.graph_ptr(), a.rotated(), std::move(values));
}

GKMClass specialize_rotation(const GKMClass& c) {
  if (c.rotated()) return c;
  const GKMGraph& g = c.graph();
  std::vector<GradedPoly> images;
  GradedPoly u = GradedPoly::generator(g.rotation_table(), 0);
  for (int i = 1; i <= g.n(); ++i) images.push_back(u * Rational(i));
  std::vector<GradedPoly> values;
  for (const auto& v : c.values()) values.push_back(v.substitute(images));
  return GKMClass(c.graph_ptr(), true, std::move(values));
}

std::vector<GKMClass> schubert_basis(const GraphPtr& graph) {
  std::vector<GKMClass> basis;
  basis.reserve(graph->vertex_count());
  for (std::size_t v = 0; v < graph->vertex_count(); ++v)
    basis.push_back(equivariant_schubert(graph, graph->partition_of(v)));
  return basis;
}

SchubertClass specialize_ordinary(const GKMClass& c, long d) {
  return specialize_ordinary(c, schubert_basis(c.graph_ptr()), d);
}

SchubertClass specialize_ordinary(const GKMClass& c, const std::vector<GKMClass>& basis, long d) {
  const GKMGraph& g = c.graph();
  std::vector<GKMClass> local;
  const std::vector<GKMClass>* b = &basis;
  if (c.rotated()) {
    for (const auto& cls : basis) local.push_back(specialize_rotation(cls));
    b = &local;
  }
  std::vector<GradedPoly> coeffs(g.vertex_count(), GradedPoly(c.table()));
  std::vector<std::size_t> done;
  for (std::size_t v : g.bruhat_order()) {
    GradedPoly residual = c.value(v);
    for (std::size_t w : done) {
      if (coeffs[w].is_zero()) continue;
      const GradedPoly& sv = (*b)[w].value(v);
      if (!sv.is_zero()) residual -= coeffs[w] * sv;
    }
    done.push_back(v);
    if (residual.is_zero()) continue;
    // divide by the normalization, one down-edge label at a time
    for (std::size_t ei : g.incident(v)) {
      const GKMEdge& e = g.edges()[ei];
      if (e.to != v) continue;
      GradedPoly label = c.edge_label(e);
      auto q = divide_by_linear(residual, label);
      if (!q) throw InternalError("class is not a polynomial combination of Schubert classes");
      residual = std::move(*q);
    }
    // labels u_out - u_in are the negated normalization factors u_in - u_out
    std::size_t down = 0;
    for (std::size_t ei : g.incident(v)) down += g.edges()[ei].to == v;
    if (down % 2 == 1) residual = -residual;
    coeffs[v] = std::move(residual);
  }
  SchubertClass out(d);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out.add_term(g.partition_of(v), coeffs[v].constant_term());
  return out;
}

}  // namespace sato
