#include "sato/power_series.hpp"

#include <utility>

#include "sato/errors.hpp"

namespace sato {

PowerSeries::PowerSeries(std::string variable, unsigned order)
    : variable_(std::move(variable)), coeffs_(order + 1, Rational(0)), order_(order) {}

PowerSeries::PowerSeries(std::string variable, std::vector<Rational> coefficients, unsigned order)
    : variable_(std::move(variable)), coeffs_(std::move(coefficients)), order_(order) {
  coeffs_.resize(order + 1, Rational(0));
}

PowerSeries PowerSeries::one(std::string variable, unsigned order) {
  PowerSeries s(std::move(variable), order);
  s.coeffs_[0] = Rational(1);
  return s;
}

PowerSeries PowerSeries::identity(std::string variable, unsigned order) {
  PowerSeries s(std::move(variable), order);
  if (order >= 1) s.coeffs_[1] = Rational(1);
  return s;
}

void PowerSeries::require_compatible(const PowerSeries& o) const {
  if (variable_ != o.variable_ || order_ != o.order_)
    throw StructuralError("power series differ in variable or order");
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  require_compatible(o);
  for (unsigned k = 0; k <= order_; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  require_compatible(o);
  for (unsigned k = 0; k <= order_; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  a.require_compatible(b);
  PowerSeries out(a.variable_, a.order_);
  for (unsigned i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= a.order_; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

Rational PowerSeries::evaluate(const Rational& x) const {
  Rational acc(0);
  for (unsigned k = order_ + 1; k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

PowerSeries series_inverse(const PowerSeries& s) {
  const Rational& a0 = s[0];
  if (a0.is_zero()) throw SingularSeriesError("series has zero constant term; not invertible");
  PowerSeries inv(s.variable(), s.order());
  inv[0] = Rational(1) / a0;
  for (unsigned n = 1; n <= s.order(); ++n) {
    Rational acc(0);
    for (unsigned k = 1; k <= n; ++k) acc += s[k] * inv[n - k];
    inv[n] = -acc / a0;
  }
  return inv;
}

PowerSeries series_exp(const PowerSeries& s) {
  if (!s[0].is_zero()) throw DomainError("series_exp needs a zero constant term");
  // E' = s' E  =>  n E_n = sum_{k=1}^{n} k s_k E_{n-k}
  PowerSeries e(s.variable(), s.order());
  e[0] = Rational(1);
  for (unsigned n = 1; n <= s.order(); ++n) {
    Rational acc(0);
    for (unsigned k = 1; k <= n; ++k) acc += Rational(static_cast<long>(k)) * s[k] * e[n - k];
    e[n] = acc / Rational(static_cast<long>(n));
  }
  return e;
}

}  // namespace sato
