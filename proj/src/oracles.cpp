#include "sato/oracles.hpp"

#include <algorithm>
#include <functional>

namespace sato::oracle {

Rational h_by_monomials(unsigned m, const Alphabet& a) {
  Rational total(0);
  std::vector<std::size_t> idx;
  std::function<void(std::size_t, unsigned)> walk = [&](std::size_t start, unsigned left) {
    if (left == 0) {
      Rational prod(1);
      for (auto i : idx) prod *= a[i];
      total += prod;
      return;
    }
    for (std::size_t i = start; i < a.size(); ++i) {
      idx.push_back(i);
      walk(i, left - 1);
      idx.pop_back();
    }
  };
  walk(0, m);
  return total;
}

Rational e_by_subsets(unsigned m, const Alphabet& a) {
  if (m > a.size()) return Rational(0);
  Rational total(0);
  std::vector<bool> pick(a.size(), false);
  std::fill(pick.begin(), pick.begin() + m, true);
  do {
    Rational prod(1);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (pick[i]) prod *= a[i];
    total += prod;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return total;
}

Rational power_sum(unsigned m, const Alphabet& a) {
  Rational total(0);
  for (const auto& x : a) total += pow(x, m);
  return total;
}

namespace {

using Monomial = std::vector<int>;
using IntPoly = std::map<Monomial, long long>;

IntPoly schur_polynomial(const Partition& lambda, unsigned n) {
  IntPoly out;
  std::vector<std::vector<int>> t(lambda.length());
  for (std::size_t r = 0; r < lambda.length(); ++r) t[r].assign(static_cast<std::size_t>(lambda.part(r + 1)), 0);
  Monomial weight(n, 0);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == lambda.length()) {
      ++out[weight];
      return;
    }
    if (c == t[r].size()) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= static_cast<int>(n); ++v) {
      t[r][c] = v;
      ++weight[static_cast<std::size_t>(v - 1)];
      fill(r, c + 1);
      --weight[static_cast<std::size_t>(v - 1)];
    }
  };
  if (lambda.length() <= n) fill(0, 0);
  return out;
}

bool dominant(const Monomial& m) { return std::is_sorted(m.begin(), m.end(), std::greater<int>()); }

}  // namespace

LRResult lr_by_schur_polynomials(const Partition& lambda, const Partition& mu, unsigned variables) {
  const IntPoly a = schur_polynomial(lambda, variables);
  const IntPoly b = schur_polynomial(mu, variables);
  // only dominant monomials are needed to read off a symmetric polynomial
  IntPoly product;
  Monomial sum(variables);
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      for (std::size_t i = 0; i < variables; ++i) sum[i] = ma[i] + mb[i];
      if (dominant(sum)) product[sum] += ca * cb;
    }
  LRResult out;
  while (true) {
    // drop zeros, find the lexicographically largest surviving monomial
    for (auto it = product.begin(); it != product.end();) it = it->second == 0 ? product.erase(it) : std::next(it);
    if (product.empty()) break;
    const auto& [lead, coeff] = *product.rbegin();
    Partition nu{std::vector<int>(lead.begin(), lead.end())};
    long long c = coeff;
    out.emplace(nu, static_cast<long>(c));
    for (const auto& [m, k] : schur_polynomial(nu, variables))
      if (dominant(m)) product[m] -= c * k;
  }
  return out;
}

std::vector<Rational> bernoulli_by_recurrence(unsigned n) {
  std::vector<Rational> b(n + 1);
  b[0] = Rational(1);
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc(0);
    for (unsigned k = 0; k < m; ++k) acc += binomial(m + 1, k) * b[k];
    b[m] = -acc / Rational(static_cast<long>(m + 1));
  }
  return b;
}

}  // namespace sato::oracle
