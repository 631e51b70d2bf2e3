#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "sato/graded_poly.hpp"
#include "sato/partition.hpp"
#include "sato/power_series.hpp"
#include "sato/rational.hpp"

namespace gen {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20261018);
  return engine;
}

inline long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline sato::Rational rational(long span = 9, long max_den = 6) {
  return sato::Rational(integer(-span, span), integer(1, max_den));
}

inline sato::Rational nonzero_rational() {
  sato::Rational r;
  while (r.is_zero()) r = rational();
  return r;
}

inline std::vector<sato::Rational> alphabet(std::size_t max_size) {
  std::vector<sato::Rational> a(static_cast<std::size_t>(integer(0, static_cast<long>(max_size))));
  for (auto& x : a) x = rational();
  return a;
}

inline sato::Partition partition(int max_size) {
  int n = static_cast<int>(integer(0, max_size));
  std::vector<int> parts;
  while (n > 0) {
    parts.push_back(static_cast<int>(integer(1, n)));
    n -= parts.back();
  }
  std::sort(parts.rbegin(), parts.rend());
  return sato::Partition(parts);
}

/// Random polynomial with up to `terms` monomials of weight <= max_weight.
inline sato::GradedPoly poly(const sato::TablePtr& table, std::optional<unsigned> cap, unsigned max_weight,
                             int terms = 6) {
  sato::GradedPoly p(table, cap);
  for (int t = 0; t < terms; ++t) {
    sato::Exponents e(table->size(), 0);
    unsigned budget = static_cast<unsigned>(integer(0, max_weight));
    for (std::size_t i = 0; i < e.size(); ++i) {
      unsigned w = (*table)[i].weight;
      if (w == 0) continue;
      e[i] = static_cast<unsigned>(integer(0, budget / w));
      budget -= e[i] * w;
    }
    p.add_term(e, rational());
  }
  return p;
}

inline sato::PowerSeries series(unsigned order, bool unit_constant) {
  std::vector<sato::Rational> c(order + 1);
  for (auto& x : c) x = rational();
  if (unit_constant) c[0] = nonzero_rational();
  return sato::PowerSeries("x", c, order);
}

}  // namespace gen
