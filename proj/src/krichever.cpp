#include "sato/krichever.hpp"

#include <string>

#include "sato/errors.hpp"
#include "sato/symmetric.hpp"

namespace sato {

PullbackMap PullbackMap::make_kq(int q, int g, bool equivariant) {
  PullbackMap m{MapKind::kq, g, q, 0, equivariant, false};
  m.validate();
  return m;
}

PullbackMap PullbackMap::make_k1(int g, bool equivariant) {
  PullbackMap m{MapKind::k1, g, 1, 0, equivariant, false};
  m.validate();
  return m;
}

PullbackMap PullbackMap::make_line(int g, int h, bool equivariant) {
  PullbackMap m{MapKind::line, g, 0, h, equivariant, false};
  m.validate();
  return m;
}

void PullbackMap::validate() const {
  if (g < 2) throw DomainError("Krichever maps need genus g >= 2");
  switch (kind) {
    case MapKind::kq:
      if (q < 2) throw DomainError("kq needs q >= 2 (use k1 for q = 1)");
      break;
    case MapKind::k1:
      break;
    case MapKind::line:
      if (h <= 2 * g - 2) throw DomainError("the line-bundle map needs h > 2g - 2");
      break;
  }
}

int PullbackMap::rank() const {
  switch (kind) {
    case MapKind::kq: return hodge_rank(g, q);
    case MapKind::k1: return g;
    case MapKind::line: return h - g + 1;
  }
  return 0;
}

TautRing PullbackMap::target_ring() const {
  validate();
  switch (kind) {
    case MapKind::kq: return TautRing::moduli(g, q);
    case MapKind::k1: return TautRing::moduli(g, 1);
    case MapKind::line: return TautRing::linebundle(g, h);
  }
  throw InternalError("unknown map kind");
}

PullbackMap PullbackMap::as_equivariant(bool on) const {
  PullbackMap m = *this;
  m.equivariant = on;
  return m;
}

namespace {

Alphabet consecutive(long from, long to) {
  Alphabet a;
  for (long x = from; x <= to; ++x) a.emplace_back(x);
  return a;
}

Alphabet descending(long from, long count) {
  Alphabet a;
  for (long i = 0; i < count; ++i) a.emplace_back(from - i);
  return a;
}

Rational sign(long k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

GradedPoly pullback_generator(const PullbackMap& map, int r) {
  map.validate();
  if (r < 1) throw DomainError("generator index r must be >= 1");
  const TautRing ring = map.target_ring();
  const int d = map.rank();
  const bool line = map.kind == MapKind::line;
  auto chern = [&](int j) { return line ? ring.P(j) : ring.lambda(j); };

  if (!map.equivariant) return r <= d ? chern(r) * sign(r) : ring.zero();

  const GradedPoly cotangent = line ? ring.omega() : ring.psi();
  // (-1)^r sum_{j+m=r} coeff(m) cotangent^m chern_j
  auto assemble = [&](auto coeff) {
    GradedPoly out = ring.zero();
    for (int m = 0; m <= r; ++m) {
      GradedPoly cj = chern(r - m);
      if (cj.is_zero()) continue;
      Rational c = coeff(m);
      if (c.is_zero()) continue;
      out += cotangent.pow(static_cast<unsigned>(m)) * cj * c;
    }
    return out * sign(r);
  };

  switch (map.kind) {
    case MapKind::kq: {
      const long q = map.q;
      if (r <= d) {
        Alphabet a = consecutive(q, q + d - r);
        return assemble([&](int m) { return sign(m) * eval_h(static_cast<unsigned>(m), a); });
      }
      // q-1, q-2, ..., q-r+d+1
      Alphabet a = descending(q - 1, r - d - 1);
      const bool alt = map.kq_alternate_sign;
      return assemble([&](int m) { return (alt ? sign(m) : Rational(1)) * eval_e(static_cast<unsigned>(m), a); });
    }
    case MapKind::k1: {
      const int g = map.g;
      if (r <= g - 1) {
        Alphabet a = consecutive(1, g - r);
        return assemble([&](int m) { return sign(m) * eval_h(static_cast<unsigned>(m), a); });
      }
      if (r == g) return ring.lambda(g) * sign(g);
      if (r == g + 1) return ring.zero();
      Alphabet a = consecutive(1, r - g - 1);
      return assemble([&](int m) { return sign(m) * eval_e(static_cast<unsigned>(m), a); });
    }
    case MapKind::line: {
      if (r <= d) {
        Alphabet a = consecutive(1, d - r);
        return assemble([&](int m) { return sign(m) * eval_h(static_cast<unsigned>(m), a); });
      }
      Alphabet a = consecutive(1, r - d - 1);
      return assemble([&](int m) { return sign(m) * eval_e(static_cast<unsigned>(m), a); });
    }
  }
  throw InternalError("unknown map kind");
}

TablePtr equivariant_source_table(unsigned n) {
  std::vector<Generator> gens;
  for (unsigned r = 1; r <= n; ++r) gens.push_back({"C_" + std::to_string(r), r});
  gens.push_back({"u", 1});
  return make_table(std::move(gens));
}

GradedPoly pullback_class(const PullbackMap& map, const SchubertClass& x) {
  if (!map.equivariant) return pullback_class(map, expand_in_generators(x));
  unsigned top = 0;
  for (const auto& [lambda, c] : x.terms()) {
    if (!lambda.is_column())
      throw UnsupportedInputError("equivariant pullback of sigma" + lambda.str() +
                                  " needs shifted Schur functions; pass a polynomial in C_r and u");
    top = std::max(top, static_cast<unsigned>(lambda.size()));
  }
  TablePtr table = equivariant_source_table(top);
  GradedPoly p(table);
  for (const auto& [lambda, c] : x.terms()) {
    if (lambda.empty()) p += GradedPoly::constant(table, c);
    else p += GradedPoly::generator(table, static_cast<std::size_t>(lambda.size() - 1)) * c;
  }
  return pullback_class(map, p);
}

GradedPoly pullback_class(const PullbackMap& map, const GradedPoly& x) {
  const TautRing ring = map.target_ring();
  std::vector<GradedPoly> images;
  for (const auto& gen : x.table().generators()) {
    const std::string& name = gen.name;
    if (name == "u") {
      if (!map.equivariant) throw UnsupportedInputError("ordinary pullback does not accept the equivariant generator u");
      images.push_back(-(map.kind == MapKind::line ? ring.omega() : ring.psi()));
      continue;
    }
    const char expected = map.equivariant ? 'C' : 'c';
    if (name.size() < 3 || name[0] != expected || name[1] != '_')
      throw UnsupportedInputError(std::string(map.equivariant ? "equivariant" : "ordinary") +
                                  " pullback does not accept generator '" + name + "'");
    int r = std::stoi(name.substr(2));
    images.push_back(pullback_generator(map, r));
  }
  if (images.empty()) return ring.constant(x.constant_term());
  return x.substitute(images);
}

bool equivariant_limit_check(const PullbackMap& map, int r) {
  GradedPoly equivariant = pullback_generator(map.as_equivariant(true), r);
  GradedPoly ordinary = pullback_generator(map.as_equivariant(false), r);
  const std::string cotangent = map.kind == MapKind::line ? "omega" : "psi";
  return equivariant.set_zero({cotangent}) == ordinary;
}

}  // namespace sato
