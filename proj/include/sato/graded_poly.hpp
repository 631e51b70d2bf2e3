#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sato/rational.hpp"

namespace sato {

struct Generator {
  std::string name;
  unsigned weight = 1;  // complex degree

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Ordered list of named, weighted generators. The position of a generator
/// in the table is its slot in every exponent vector.
class GeneratorTable {
 public:
  explicit GeneratorTable(std::vector<Generator> generators);

  std::size_t size() const { return generators_.size(); }
  const Generator& operator[](std::size_t i) const { return generators_[i]; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const GeneratorTable& a, const GeneratorTable& b) {
    return a.generators_ == b.generators_;
  }

 private:
  std::vector<Generator> generators_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;
using Exponents = std::vector<unsigned>;

TablePtr make_table(std::vector<Generator> generators);

/// Sparse polynomial over Q in the generators of a table, graded by the
/// weighted (complex) degree. With a degree cap set, every term of weight
/// above the cap is discarded on construction and after each operation.
class GradedPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  GradedPoly(TablePtr table, std::optional<unsigned> degree_cap = std::nullopt);

  static GradedPoly constant(TablePtr table, const Rational& value,
                             std::optional<unsigned> degree_cap = std::nullopt);
  static GradedPoly generator(TablePtr table, std::string_view name,
                              std::optional<unsigned> degree_cap = std::nullopt);
  static GradedPoly generator(TablePtr table, std::size_t index,
                              std::optional<unsigned> degree_cap = std::nullopt);

  const GeneratorTable& table() const { return *table_; }
  const TablePtr& table_ptr() const { return table_; }
  std::optional<unsigned> degree_cap() const { return cap_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Exponents& exps) const;
  Rational constant_term() const;

  unsigned weight(const Exponents& exps) const;
  /// Largest term weight; nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;
  bool is_homogeneous() const;
  GradedPoly homogeneous_part(unsigned k) const;

  /// Adds coeff * monomial, dropping it if it exceeds the cap or cancels.
  void add_term(const Exponents& exps, const Rational& coeff);

  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  GradedPoly& operator*=(const Rational& c);
  GradedPoly operator-() const;

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(GradedPoly a, const Rational& c) { return a *= c; }
  friend GradedPoly operator*(const Rational& c, GradedPoly a) { return a *= c; }

  friend bool operator==(const GradedPoly& a, const GradedPoly& b);

  GradedPoly pow(unsigned exponent) const;

  /// Same terms re-truncated at a new cap.
  GradedPoly with_cap(std::optional<unsigned> cap) const;

  /// Ring homomorphism sending generator i to images[i]. All images must
  /// share one table and cap; the result lives there.
  GradedPoly substitute(const std::vector<GradedPoly>& images) const;

  /// Sets the named generators to zero (they remain in the table).
  GradedPoly set_zero(const std::vector<std::string>& names) const;

  /// Exponent vector with a single generator raised to `power`.
  Exponents monomial(std::size_t index, unsigned power = 1) const;

 private:
  void require_compatible(const GradedPoly& o) const;

  TablePtr table_;
  std::optional<unsigned> cap_;
  TermMap terms_;
};

/// Exact product; terms above the shared cap are dropped. Throws
/// StructuralError when tables or caps differ.
GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b);

}  // namespace sato
