#include "sato/tautological.hpp"

#include <algorithm>
#include <cstdio>
#include <mutex>
#include <string>

#include "sato/errors.hpp"

namespace sato {

int hodge_rank(int g, int q) {
  if (g < 0 || q < 1) throw DomainError("hodge rank needs g >= 0 and q >= 1");
  return q == 1 ? g : (2 * q - 1) * (g - 1);
}

TautRing TautRing::moduli(int g, int q, std::optional<unsigned> cap) {
  if (g < 2) throw DomainError("moduli of curves need genus g >= 2");
  int rank = hodge_rank(g, q);
  std::vector<Generator> gens{{"psi", 1}};
  for (int j = 1; j <= rank; ++j) gens.push_back({"lambda_" + std::to_string(j), static_cast<unsigned>(j)});
  TautRing ring(Flavor::moduli_q, make_table(std::move(gens)), cap);
  ring.g_ = g;
  ring.q_ = q;
  ring.rank_ = rank;
  return ring;
}

TautRing TautRing::kappa(unsigned max_index, std::optional<unsigned> cap) {
  std::vector<Generator> gens;
  for (unsigned r = 0; r <= max_index; ++r) gens.push_back({"kappa_" + std::to_string(r), r});
  return TautRing(Flavor::kappa, make_table(std::move(gens)), cap);
}

TautRing TautRing::linebundle(int g, int h, std::optional<unsigned> cap) {
  if (g < 2) throw DomainError("line-bundle moduli need genus g >= 2");
  if (h <= 2 * g - 2) throw DomainError("line-bundle moduli need h > 2g - 2");
  int d = h - g + 1;
  std::vector<Generator> gens{{"omega", 1}};
  for (int j = 1; j <= d; ++j) gens.push_back({"P_" + std::to_string(j), static_cast<unsigned>(j)});
  TautRing ring(Flavor::linebundle, make_table(std::move(gens)), cap);
  ring.g_ = g;
  ring.h_ = h;
  ring.rank_ = d;
  return ring;
}

TautRing TautRing::mumford_morita(unsigned max_weight, std::optional<unsigned> cap) {
  std::vector<Generator> gens;
  for (unsigned w = 0; w <= max_weight; ++w)
    for (int i = static_cast<int>(w) + 1; i >= 0; --i)
      gens.push_back({"m_" + std::to_string(i) + "_" + std::to_string(static_cast<int>(w) + 1 - i), w});
  return TautRing(Flavor::mumford_morita, make_table(std::move(gens)), cap);
}

GradedPoly TautRing::named(const std::string& name) const {
  if (!table_->index_of(name)) throw DomainError("generator " + name + " is not part of this ring");
  return GradedPoly::generator(table_, name, cap_);
}

GradedPoly TautRing::psi() const { return named("psi"); }

GradedPoly TautRing::lambda(int j) const {
  if (flavor_ != Flavor::moduli_q) throw DomainError("lambda classes live in the moduli_q ring");
  if (j < 0) throw DomainError("negative lambda index");
  if (j == 0) return one();
  if (j > rank_) return zero();
  return named("lambda_" + std::to_string(j));
}

GradedPoly TautRing::kappa(int r) const {
  if (r < 0) throw DomainError("negative kappa index");
  return named("kappa_" + std::to_string(r));
}

GradedPoly TautRing::omega() const { return named("omega"); }

GradedPoly TautRing::P(int j) const {
  if (flavor_ != Flavor::linebundle) throw DomainError("P classes live in the linebundle ring");
  if (j < 0) throw DomainError("negative P index");
  if (j == 0) return one();
  if (j > rank_) return zero();
  return named("P_" + std::to_string(j));
}

GradedPoly TautRing::m(int i, int j) const {
  if (i < 0 || j < 0 || i + j < 1) throw DomainError("m_{i,j} needs i, j >= 0 and i + j >= 1");
  return named("m_" + std::to_string(i) + "_" + std::to_string(j));
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table;  // guarded by bernoulli_mutex

std::vector<Rational> compute_bernoulli(unsigned order) {
  // (e^x - 1) / x = sum x^n / (n+1)!
  PowerSeries s("x", order);
  for (unsigned n = 0; n <= order; ++n) s[n] = Rational(1) / factorial(n + 1);
  PowerSeries inv = series_inverse(s);
  std::vector<Rational> out(order + 1);
  for (unsigned n = 0; n <= order; ++n) out[n] = inv[n] * factorial(n);
  return out;
}

}  // namespace

Rational bernoulli_number(unsigned n) {
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  if (bernoulli_table.size() <= n) {
    unsigned order = std::max<unsigned>(n, 2 * static_cast<unsigned>(bernoulli_table.size()));
    bernoulli_table = compute_bernoulli(std::max<unsigned>(order, 16));
  }
  return bernoulli_table[n];
}

std::vector<Rational> bernoulli_poly(unsigned n) {
  // t e^{xt} / (e^t - 1) = (sum B_k t^k / k!) (sum x^i t^i / i!); the t^n
  // coefficient times n! is sum_k B_k / k! x^{n-k} / (n-k)! * n!.
  std::vector<Rational> coeffs(n + 1, Rational(0));
  for (unsigned k = 0; k <= n; ++k) {
    Rational b = bernoulli_number(k);
    if (b.is_zero()) continue;
    coeffs[n - k] += b / factorial(k) / factorial(n - k) * factorial(n);
  }
  return coeffs;
}

Rational bernoulli_poly_value(unsigned n, const Rational& x) {
  auto coeffs = bernoulli_poly(n);
  Rational acc(0);
  for (unsigned k = n + 1; k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

GradedPoly ch_hodge(int r, int q, int g, const TautRing& ring, bool assign_kappa0) {
  if (r < 0) throw DomainError("ch_r needs r >= 0");
  if (q < 1) throw DomainError("Hodge bundle E_q needs q >= 1");
  if (g < 2) throw DomainError("Hodge bundle needs genus g >= 2");
  if (ring.flavor() != Flavor::kappa) throw StructuralError("ch_hodge lives in the kappa ring");
  Rational c = bernoulli_poly_value(static_cast<unsigned>(r + 1), Rational(q)) /
               factorial(static_cast<unsigned>(r + 1));
  if (r == 0 && assign_kappa0) return ring.constant(c * Rational(2L * g - 2));
  return ring.kappa(r) * c;
}

GradedPoly ch_hodge(int r, int q, int g, bool assign_kappa0) {
  return ch_hodge(r, q, g, TautRing::kappa(static_cast<unsigned>(std::max(r, 0))), assign_kappa0);
}

namespace {

void check_components(const ChernData& d, ChernData::Kind expected) {
  if (d.kind != expected) throw StructuralError("Chern data of the wrong kind");
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    const auto& c = d.components[k];
    if (!(c.table() == d.components[0].table()) || c.degree_cap() != d.components[0].degree_cap())
      throw StructuralError("Chern data components live in different rings");
    if (!c.is_zero() && (!c.is_homogeneous() || *c.degree() != k + 1))
      throw StructuralError("Chern data component " + std::to_string(k + 1) + " is not homogeneous of that weight");
  }
}

}  // namespace

// Newton: k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i with p_i = i! ch_i.
ChernData chern_from_ch(const ChernData& ch) {
  check_components(ch, ChernData::Kind::character);
  const std::size_t n = ch.components.size();
  ChernData out{ChernData::Kind::chern, ch.rank, {}};
  if (n == 0) return out;
  const GradedPoly& proto = ch.components[0];
  std::vector<GradedPoly> p, e{GradedPoly::constant(proto.table_ptr(), Rational(1), proto.degree_cap())};
  for (std::size_t i = 1; i <= n; ++i) p.push_back(ch.components[i - 1] * factorial(static_cast<unsigned>(i)));
  for (std::size_t k = 1; k <= n; ++k) {
    GradedPoly acc(proto.table_ptr(), proto.degree_cap());
    for (std::size_t i = 1; i <= k; ++i) {
      GradedPoly term = e[k - i] * p[i - 1];
      if (i % 2 == 1) acc += term;
      else acc -= term;
    }
    e.push_back(acc * Rational(1, static_cast<long>(k)));
  }
  out.components.assign(e.begin() + 1, e.end());
  return out;
}

ChernData ch_from_chern(const ChernData& c) {
  check_components(c, ChernData::Kind::chern);
  const std::size_t n = c.components.size();
  ChernData out{ChernData::Kind::character, c.rank, {}};
  if (n == 0) return out;
  const GradedPoly& proto = c.components[0];
  std::vector<GradedPoly> e{GradedPoly::constant(proto.table_ptr(), Rational(1), proto.degree_cap())};
  for (const auto& x : c.components) e.push_back(x);
  std::vector<GradedPoly> p;
  for (std::size_t k = 1; k <= n; ++k) {
    // (-1)^{k-1} p_k = k e_k - sum_{i=1}^{k-1} (-1)^{i-1} e_{k-i} p_i
    GradedPoly acc = e[k] * Rational(static_cast<long>(k));
    for (std::size_t i = 1; i < k; ++i) {
      GradedPoly term = e[k - i] * p[i - 1];
      if (i % 2 == 1) acc -= term;
      else acc += term;
    }
    p.push_back(k % 2 == 1 ? acc : -acc);
  }
  for (std::size_t k = 1; k <= n; ++k)
    out.components.push_back(p[k - 1] * (Rational(1) / factorial(static_cast<unsigned>(k))));
  return out;
}

PowerSeries todd_series(unsigned order) {
  // -w / (1 - e^w): divide numerator and denominator by -w, giving
  // 1 / ((e^w - 1) / w), and (e^w - 1) / w is read off exp(w) - 1 shifted by one.
  PowerSeries w = PowerSeries::identity("omega", order + 1);
  PowerSeries e = series_exp(w);
  PowerSeries quotient("omega", order);
  for (unsigned n = 0; n <= order; ++n) quotient[n] = e[n + 1];
  return series_inverse(quotient);
}

GradedPoly grr_ch_P(int k, const TautRing& ring) {
  if (k < 0) throw DomainError("ch_k needs k >= 0");
  if (ring.flavor() != Flavor::mumford_morita) throw StructuralError("grr_ch_P lives in the Mumford-Morita ring");
  const unsigned top = static_cast<unsigned>(k + 1);
  TablePtr gw = make_table({{"gamma", 1}, {"omega", 1}});
  // e^gamma and Td(omega) as polynomials truncated at weight k+1
  PowerSeries eg = series_exp(PowerSeries::identity("gamma", top));
  PowerSeries td = todd_series(top);
  GradedPoly ch_l(gw, top), todd(gw, top);
  for (unsigned i = 0; i <= top; ++i) {
    ch_l.add_term({i, 0}, eg[i]);
    todd.add_term({0, i}, td[i]);
  }
  GradedPoly product = (ch_l * todd).homogeneous_part(top);
  GradedPoly out = ring.zero();
  for (const auto& [e, c] : product.terms()) out += ring.m(static_cast<int>(e[0]), static_cast<int>(e[1])) * c;
  return out;
}

GradedPoly grr_ch_P(int k) { return grr_ch_P(k, TautRing::mumford_morita(static_cast<unsigned>(std::max(k, 0)))); }

GradedPoly ch_P_stated(int k, const TautRing& ring) {
  if (k < 1) throw DomainError("the closed formula for ch_k needs k >= 1");
  if (ring.flavor() != Flavor::mumford_morita) throw StructuralError("ch_P_stated lives in the Mumford-Morita ring");
  const auto uk = static_cast<unsigned>(k);
  GradedPoly out = ring.m(k + 1, 0) * (Rational(1) / factorial(uk + 1));
  out -= ring.m(k, 1) * (Rational(1) / (Rational(2) * factorial(uk)));
  for (int j = 1; j <= k / 2; ++j) {
    const auto uj = static_cast<unsigned>(j);
    Rational c = bernoulli_number(2 * uj) / (factorial(2 * uj) * factorial(uk - 2 * uj));
    out += ring.m(k + 1 - 2 * j, 2 * j) * c;
  }
  return out;
}

GradedPoly ch_P_stated(int k) { return ch_P_stated(k, TautRing::mumford_morita(static_cast<unsigned>(std::max(k, 0)))); }

std::vector<ChPDelta> compare_ch_P(int k) {
  if (k < 1) throw DomainError("compare_ch_P needs k >= 1");
  TautRing ring = TautRing::mumford_morita(static_cast<unsigned>(k));
  GradedPoly expansion = grr_ch_P(k, ring);
  GradedPoly stated = ch_P_stated(k, ring);
  GradedPoly diff = expansion - stated;
  std::vector<ChPDelta> out;
  for (const auto& [e, c] : diff.terms()) {
    std::size_t idx = 0;
    while (e[idx] == 0) ++idx;
    const std::string& name = ring.table()->operator[](idx).name;
    int i = 0, j = 0;
    std::sscanf(name.c_str(), "m_%d_%d", &i, &j);
    ChPDelta d{i, j, expansion.coefficient(e), stated.coefficient(e), ChPDelta::Kind::other};
    if (d.stated.is_zero() && j % 2 == 0 && j / 2 > k / 2) d.kind = ChPDelta::Kind::omitted_boundary_term;
    else if (!d.stated.is_zero() && !d.expansion.is_zero() && j % 2 == 0 && j >= 2) {
      // ratio of the two readings is (k-2j')! / (k+1-2j')! = 1 / (k+1-2j')
      Rational ratio = d.expansion / d.stated;
      if (ratio == Rational(1, k + 1 - j)) d.kind = ChPDelta::Kind::denominator_mismatch;
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::string to_string(ChPDelta::Kind kind) {
  switch (kind) {
    case ChPDelta::Kind::omitted_boundary_term: return "omitted_boundary_term";
    case ChPDelta::Kind::denominator_mismatch: return "denominator_mismatch";
    case ChPDelta::Kind::other: return "other";
  }
  return "other";
}

}  // namespace sato
