#pragma once

#include <string>
#include <vector>

#include "sato/rational.hpp"

namespace sato {

/// Univariate power series truncated at a fixed order: coefficients of
/// x^0 .. x^order are kept, everything above is dropped.
class PowerSeries {
 public:
  PowerSeries(std::string variable, unsigned order);
  PowerSeries(std::string variable, std::vector<Rational> coefficients, unsigned order);

  static PowerSeries one(std::string variable, unsigned order);
  /// The series of the variable itself (zero if order is 0).
  static PowerSeries identity(std::string variable, unsigned order);

  const std::string& variable() const { return variable_; }
  unsigned order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](unsigned k) const { return coeffs_.at(k); }
  Rational& operator[](unsigned k) { return coeffs_.at(k); }

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const Rational& c);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  /// Evaluates the truncated series as a polynomial at x.
  Rational evaluate(const Rational& x) const;

 private:
  void require_compatible(const PowerSeries& o) const;

  std::string variable_;
  std::vector<Rational> coeffs_;
  unsigned order_;
};

/// Multiplicative inverse up to the series order. Throws SingularSeriesError
/// when the constant term vanishes.
PowerSeries series_inverse(const PowerSeries& s);

/// exp(s) up to the series order. The constant term must be zero so the
/// result stays rational; otherwise throws DomainError.
PowerSeries series_exp(const PowerSeries& s);

}  // namespace sato
