#include "sato/graded_poly.hpp"

#include <set>
#include <utility>

#include "sato/errors.hpp"

namespace sato {

GeneratorTable::GeneratorTable(std::vector<Generator> generators)
    : generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.name.empty()) throw StructuralError("generator with empty name");
    if (!seen.insert(g.name).second)
      throw StructuralError("duplicate generator name '" + g.name + "'");
  }
}

std::optional<std::size_t> GeneratorTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  return std::nullopt;
}

TablePtr make_table(std::vector<Generator> generators) {
  return std::make_shared<const GeneratorTable>(std::move(generators));
}

GradedPoly::GradedPoly(TablePtr table, std::optional<unsigned> degree_cap)
    : table_(std::move(table)), cap_(degree_cap) {
  if (!table_) throw StructuralError("null generator table");
}

GradedPoly GradedPoly::constant(TablePtr table, const Rational& value,
                                std::optional<unsigned> degree_cap) {
  GradedPoly p(std::move(table), degree_cap);
  p.add_term(Exponents(p.table().size(), 0), value);
  return p;
}

GradedPoly GradedPoly::generator(TablePtr table, std::string_view name,
                                 std::optional<unsigned> degree_cap) {
  auto idx = table->index_of(name);
  if (!idx) throw StructuralError("unknown generator '" + std::string(name) + "'");
  return generator(std::move(table), *idx, degree_cap);
}

GradedPoly GradedPoly::generator(TablePtr table, std::size_t index,
                                 std::optional<unsigned> degree_cap) {
  if (index >= table->size()) throw StructuralError("generator index out of range");
  GradedPoly p(std::move(table), degree_cap);
  p.add_term(p.monomial(index), Rational(1));
  return p;
}

Exponents GradedPoly::monomial(std::size_t index, unsigned power) const {
  Exponents e(table_->size(), 0);
  e.at(index) = power;
  return e;
}

Rational GradedPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedPoly::constant_term() const {
  return coefficient(Exponents(table_->size(), 0));
}

unsigned GradedPoly::weight(const Exponents& exps) const {
  unsigned w = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) w += exps[i] * (*table_)[i].weight;
  return w;
}

std::optional<unsigned> GradedPoly::degree() const {
  std::optional<unsigned> d;
  for (const auto& [e, c] : terms_) {
    unsigned w = weight(e);
    if (!d || w > *d) d = w;
  }
  return d;
}

bool GradedPoly::is_homogeneous() const {
  std::optional<unsigned> d;
  for (const auto& [e, c] : terms_) {
    unsigned w = weight(e);
    if (d && *d != w) return false;
    d = w;
  }
  return true;
}

GradedPoly GradedPoly::homogeneous_part(unsigned k) const {
  GradedPoly out(table_, cap_);
  for (const auto& [e, c] : terms_)
    if (weight(e) == k) out.terms_.emplace(e, c);
  return out;
}

void GradedPoly::add_term(const Exponents& exps, const Rational& coeff) {
  if (exps.size() != table_->size())
    throw StructuralError("exponent vector length does not match generator table");
  if (coeff.is_zero()) return;
  if (cap_ && weight(exps) > *cap_) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void GradedPoly::require_compatible(const GradedPoly& o) const {
  if (table_ != o.table_ && !(*table_ == *o.table_))
    throw StructuralError("mismatched generator tables");
  if (cap_ != o.cap_) throw StructuralError("mismatched degree caps");
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  a.require_compatible(b);
  GradedPoly out(a.table_, a.cap_);
  if (a.is_zero() || b.is_zero()) return out;
  std::vector<std::pair<const Exponents*, unsigned>> bw;
  bw.reserve(b.terms_.size());
  for (const auto& [e, c] : b.terms_) bw.emplace_back(&e, b.weight(e));
  const std::size_t n = a.table_->size();
  Exponents sum(n);
  for (const auto& [ea, ca] : a.terms_) {
    unsigned wa = a.weight(ea);
    auto itb = b.terms_.begin();
    for (std::size_t k = 0; k < bw.size(); ++k, ++itb) {
      if (a.cap_ && wa + bw[k].second > *a.cap_) continue;
      const Exponents& eb = *bw[k].first;
      for (std::size_t i = 0; i < n; ++i) sum[i] = ea[i] + eb[i];
      out.add_term(sum, ca * itb->second);
    }
  }
  return out;
}

bool operator==(const GradedPoly& a, const GradedPoly& b) {
  if (a.table_ != b.table_ && !(*a.table_ == *b.table_)) return false;
  return a.cap_ == b.cap_ && a.terms_ == b.terms_;
}

GradedPoly GradedPoly::pow(unsigned exponent) const {
  GradedPoly result = constant(table_, Rational(1), cap_);
  GradedPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

GradedPoly GradedPoly::with_cap(std::optional<unsigned> cap) const {
  GradedPoly out(table_, cap);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

GradedPoly GradedPoly::substitute(const std::vector<GradedPoly>& images) const {
  if (images.size() != table_->size())
    throw StructuralError("substitution needs one image per generator");
  if (images.empty()) {
    throw StructuralError("substitution into an empty generator table needs a target");
  }
  const GradedPoly& proto = images.front();
  for (const auto& im : images) proto.require_compatible(im);

  // powers[i][k] = images[i]^k, filled lazily
  std::vector<std::vector<GradedPoly>> powers(images.size());
  auto power_of = [&](std::size_t i, unsigned k) -> const GradedPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(proto.table_, Rational(1), proto.cap_));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };

  GradedPoly out(proto.table_, proto.cap_);
  for (const auto& [e, c] : terms_) {
    GradedPoly term = constant(proto.table_, c, proto.cap_);
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i)
      if (e[i] > 0) term = term * power_of(i, e[i]);
    out += term;
  }
  return out;
}

GradedPoly GradedPoly::set_zero(const std::vector<std::string>& names) const {
  std::vector<std::size_t> killed;
  for (const auto& name : names) {
    auto idx = table_->index_of(name);
    if (!idx) throw StructuralError("unknown generator '" + name + "'");
    killed.push_back(*idx);
  }
  GradedPoly out(table_, cap_);
  for (const auto& [e, c] : terms_) {
    bool keep = true;
    for (auto i : killed) keep = keep && e[i] == 0;
    if (keep) out.terms_.emplace(e, c);
  }
  return out;
}

GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b) { return a * b; }

}  // namespace sato
