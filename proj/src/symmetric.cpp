#include "sato/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_map>

#include "sato/errors.hpp"
#include "sato/power_series.hpp"

namespace sato {

Rational eval_h(unsigned m, const Alphabet& a) {
  // h_k(a_1..a_i) = h_k(a_1..a_{i-1}) + a_i h_{k-1}(a_1..a_i)
  std::vector<Rational> h(m + 1, Rational(0));
  h[0] = Rational(1);
  for (const auto& x : a)
    for (unsigned k = 1; k <= m; ++k) h[k] += x * h[k - 1];
  return h[m];
}

Rational eval_e(unsigned m, const Alphabet& a) {
  if (m > a.size()) return Rational(0);
  std::vector<Rational> e(m + 1, Rational(0));
  e[0] = Rational(1);
  for (const auto& x : a)
    for (unsigned k = m; k >= 1; --k) e[k] += x * e[k - 1];
  return e[m];
}

std::vector<Rational> cauchy_coeffs(const Alphabet& a, unsigned order) {
  PowerSeries product = PowerSeries::one("x", order);
  for (const auto& x : a) {
    PowerSeries factor = PowerSeries::one("x", order);
    if (order >= 1) factor[1] = x;
    product = product * factor;
  }
  return series_inverse(product).coefficients();
}

namespace {

// Fills the cells of nu/lambda row by row, each row right to left, which is
// the reverse reading order; the lattice condition is checked on prefixes.
class LRFiller {
 public:
  LRFiller(const Partition& lambda, const Partition& nu, const Partition& content)
      : lambda_(lambda), nu_(nu), content_(content) {
    rows_ = nu.length();
    fill_.resize(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      fill_[r].assign(static_cast<std::size_t>(nu.part(r + 1)), 0);
    counts_.assign(content.length() + 2, 0);
  }

  long count() {
    total_ = 0;
    if (rows_ == 0) return 1;
    place(0, nu_.part(1) - 1);
    return total_;
  }

 private:
  void place(std::size_t row, int col) {
    // advance to the next skew cell
    while (row < rows_ && col < lambda_.part(row + 1)) {
      ++row;
      if (row < rows_) col = nu_.part(row + 1) - 1;
    }
    if (row >= rows_) {
      ++total_;
      return;
    }
    const int row_len = nu_.part(row + 1);
    int hi = static_cast<int>(content_.length());
    if (col + 1 < row_len) hi = std::min(hi, fill_[row][static_cast<std::size_t>(col + 1)]);
    int lo = 1;
    if (row > 0 && col >= lambda_.part(row)) lo = fill_[row - 1][static_cast<std::size_t>(col)] + 1;
    // lattice: a cell in row r holds at most r+1
    hi = std::min(hi, static_cast<int>(row) + 1);
    for (int v = lo; v <= hi; ++v) {
      auto vi = static_cast<std::size_t>(v);
      if (counts_[vi] >= content_.part(vi)) continue;
      if (v > 1 && counts_[vi] + 1 > counts_[vi - 1]) continue;
      ++counts_[vi];
      fill_[row][static_cast<std::size_t>(col)] = v;
      place(row, col - 1);
      fill_[row][static_cast<std::size_t>(col)] = 0;
      --counts_[vi];
    }
  }

  const Partition& lambda_;
  const Partition& nu_;
  const Partition& content_;
  std::size_t rows_ = 0;
  std::vector<std::vector<int>> fill_;
  std::vector<int> counts_;
  long total_ = 0;
};

void outer_shapes(const Partition& lambda, const Partition& mu, std::size_t row, int remaining,
                  std::vector<int>& cur, std::vector<Partition>& out) {
  const std::size_t max_rows = lambda.length() + mu.length();
  if (remaining == 0) {
    std::vector<int> parts = cur;
    for (std::size_t r = row; r < lambda.length(); ++r) parts.push_back(lambda.part(r + 1));
    out.emplace_back(std::move(parts));
    return;
  }
  if (row >= max_rows) return;
  const int base = lambda.part(row + 1);
  int upper = base + remaining;
  if (row > 0) upper = std::min(upper, cur[row - 1]);
  for (int v = upper; v >= base; --v) {
    if (v == 0) break;
    cur.push_back(v);
    outer_shapes(lambda, mu, row + 1, remaining - (v - base), cur, out);
    cur.pop_back();
  }
}

}  // namespace

LRResult lr_coefficients(const Partition& lambda, const Partition& mu) {
  LRResult out;
  std::vector<Partition> shapes;
  std::vector<int> cur;
  outer_shapes(lambda, mu, 0, mu.size(), cur, shapes);
  for (const auto& nu : shapes) {
    if (!nu.contains(lambda)) continue;
    long c = LRFiller(lambda, nu, mu).count();
    if (c > 0) out.emplace(nu, c);
  }
  return out;
}

TablePtr elementary_table(unsigned n, const std::string& prefix) {
  std::vector<Generator> gens;
  for (unsigned r = 1; r <= n; ++r) gens.push_back({prefix + std::to_string(r), r});
  return make_table(std::move(gens));
}

GradedPoly dual_jacobi_trudi(const Partition& lambda, const TablePtr& table) {
  const Partition conj = conjugate(lambda);
  const std::size_t n = conj.length();
  auto entry = [&](std::size_t i, std::size_t j) {
    long k = conj.part(i + 1) - static_cast<long>(i) + static_cast<long>(j);
    if (k < 0) return GradedPoly(table);
    if (k == 0) return GradedPoly::constant(table, Rational(1));
    if (static_cast<std::size_t>(k) > table->size())
      throw StructuralError("generator table too small for dual Jacobi-Trudi");
    return GradedPoly::generator(table, static_cast<std::size_t>(k - 1));
  };
  if (n == 0) return GradedPoly::constant(table, Rational(1));

  // Laplace expansion along rows with memoization on the set of used columns.
  std::unordered_map<unsigned, GradedPoly> memo;
  std::function<GradedPoly(std::size_t, unsigned)> minor = [&](std::size_t row, unsigned used) {
    if (row == n) return GradedPoly::constant(table, Rational(1));
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    GradedPoly acc(table);
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (used & (1u << j)) continue;
      GradedPoly e = entry(row, j);
      if (!e.is_zero()) {
        GradedPoly term = e * minor(row + 1, used | (1u << j));
        if (sign > 0) acc += term;
        else acc -= term;
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return minor(0, 0u);
}

GradedPoly dual_jacobi_trudi(const Partition& lambda) {
  return dual_jacobi_trudi(lambda, elementary_table(static_cast<unsigned>(std::max(lambda.size(), 1))));
}

}  // namespace sato
