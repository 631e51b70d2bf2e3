#include "sato/schubert.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "sato/errors.hpp"
#include "sato/symmetric.hpp"

namespace sato {

SchubertClass::SchubertClass(long d, TermMap terms) : d_(d) {
  for (const auto& [p, c] : terms) add_term(p, c);
}

SchubertClass SchubertClass::basis(const Partition& lambda, long d) {
  SchubertClass s(d);
  s.add_term(lambda, Rational(1));
  return s;
}

Rational SchubertClass::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SchubertClass::degree() const {
  int d = -1;
  for (const auto& [p, c] : terms_) d = std::max(d, p.size());
  return d;
}

bool SchubertClass::is_homogeneous() const {
  if (terms_.empty()) return true;
  int k = terms_.begin()->first.size();
  return std::all_of(terms_.begin(), terms_.end(), [k](const auto& t) { return t.first.size() == k; });
}

SchubertClass SchubertClass::homogeneous_part(int k) const {
  SchubertClass out(d_);
  for (const auto& [p, c] : terms_)
    if (p.size() == k) out.terms_.emplace(p, c);
  return out;
}

SchubertClass SchubertClass::truncate_to_box(int rows, int cols) const {
  SchubertClass out(d_);
  for (const auto& [p, c] : terms_)
    if (p.fits_in_box(rows, cols)) out.terms_.emplace(p, c);
  return out;
}

void SchubertClass::add_term(const Partition& lambda, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SchubertClass& SchubertClass::operator+=(const SchubertClass& o) {
  if (d_ != o.d_) throw StructuralError("Schubert classes live on different components");
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

SchubertClass& SchubertClass::operator-=(const SchubertClass& o) {
  if (d_ != o.d_) throw StructuralError("Schubert classes live on different components");
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

SchubertClass& SchubertClass::operator*=(const Rational& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

std::string SchubertClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    if (p.empty()) {
      os << mag.str();
      continue;
    }
    if (mag != Rational(1)) os << mag.str() << '*';
    os << 's' << p.str();
  }
  return os.str();
}

SchubertClass schubert_product(const SchubertClass& x, const SchubertClass& y) {
  if (x.d() != y.d()) throw StructuralError("Schubert classes live on different components");
  SchubertClass out(x.d());
  for (const auto& [lambda, a] : x.terms())
    for (const auto& [mu, b] : y.terms())
      for (const auto& [nu, mult] : lr_coefficients(lambda, mu))
        out.add_term(nu, a * b * Rational(mult));
  return out;
}

TablePtr c_table(unsigned n) { return elementary_table(n, "c_"); }

GradedPoly expand_in_generators(const SchubertClass& x) {
  return expand_in_generators(x, c_table(static_cast<unsigned>(std::max(x.degree(), 0))));
}

GradedPoly expand_in_generators(const SchubertClass& x, const TablePtr& table) {
  GradedPoly out(table);
  for (const auto& [lambda, c] : x.terms()) out += dual_jacobi_trudi(lambda, table) * c;
  return out;
}

SchubertClass evaluate_c_polynomial(const GradedPoly& p, long d) {
  std::vector<std::size_t> rank(p.table().size());
  for (std::size_t i = 0; i < rank.size(); ++i) {
    const std::string& name = p.table()[i].name;
    if (name.rfind("c_", 0) != 0) throw StructuralError("expected generators named c_r");
    rank[i] = std::stoul(name.substr(2));
  }
  SchubertClass out(d);
  for (const auto& [e, coeff] : p.terms()) {
    SchubertClass term = SchubertClass::unit(d) * coeff;
    for (std::size_t i = 0; i < e.size(); ++i) {
      SchubertClass gen = SchubertClass::basis(Partition::column(static_cast<int>(rank[i])), d);
      for (unsigned k = 0; k < e[i]; ++k) term = schubert_product(term, gen);
    }
    out += term;
  }
  return out;
}

}  // namespace sato
