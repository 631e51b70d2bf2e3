#include "doctest.h"
#include "generators.hpp"
#include "sato/errors.hpp"
#include "sato/oracles.hpp"
#include "sato/symmetric.hpp"
#include "sato/tautological.hpp"

using namespace sato;

namespace {

// B_n(x) = sum_k C(n, k) B_k x^{n-k}
Rational bernoulli_poly_by_binomials(unsigned n, const Rational& x) {
  auto b = oracle::bernoulli_by_recurrence(n);
  Rational acc;
  for (unsigned k = 0; k <= n; ++k) acc += binomial(n, k) * b[k] * pow(x, n - k);
  return acc;
}

// Coefficient of gamma^i omega^j in e^gamma * Td(omega).
Rational grr_coefficient(unsigned i, unsigned j) {
  return oracle::bernoulli_by_recurrence(j)[j] / (factorial(i) * factorial(j));
}

ChernData random_chern_data(ChernData::Kind kind, const TablePtr& t, unsigned degree) {
  ChernData d{kind, gen::integer(0, 6), {}};
  for (unsigned k = 1; k <= degree; ++k) d.components.push_back(gen::poly(t, degree, k, 5).homogeneous_part(k));
  return d;
}

}  // namespace

TEST_CASE("hodge rank") {
  CHECK(hodge_rank(3, 1) == 3);
  CHECK(hodge_rank(3, 2) == 6);
  CHECK(hodge_rank(2, 3) == 5);
}

TEST_CASE("tautological rings") {
  TautRing r = TautRing::moduli(2, 2);
  CHECK(r.rank() == 3);
  CHECK(r.lambda(0) == r.one());
  CHECK(r.lambda(4).is_zero());
  CHECK(r.lambda(3).degree() == 3u);
  CHECK_THROWS_AS(r.omega(), DomainError);

  TautRing lb = TautRing::linebundle(2, 5);
  CHECK(lb.rank() == 4);
  CHECK(lb.P(4).degree() == 4u);
  CHECK(lb.P(5).is_zero());
  CHECK_THROWS_AS(TautRing::linebundle(2, 2), DomainError);

  TautRing mm = TautRing::mumford_morita(3);
  CHECK(mm.m(1, 0).degree() == 0u);
  CHECK(mm.m(2, 2).degree() == 3u);

  TautRing capped = TautRing::moduli(3, 1, 2u);
  CHECK((capped.psi() * capped.lambda(2)).is_zero());
}

TEST_CASE("Bernoulli numbers") {
  auto ref = oracle::bernoulli_by_recurrence(30);
  CHECK(bernoulli_number(0) == Rational(1));
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(2) == ref[2]);
  CHECK(bernoulli_number(2) == Rational(1, 6));
  CHECK(bernoulli_number(3) == Rational(0));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
  for (unsigned n = 0; n <= 30; ++n) CHECK(bernoulli_number(n) == ref[n]);
  for (unsigned j = 1; j <= 10; ++j) CHECK(bernoulli_number(2 * j + 1).is_zero());
}

TEST_CASE("Bernoulli polynomials") {
  CHECK(bernoulli_poly(1) == std::vector<Rational>{Rational(-1, 2), 1});
  CHECK(bernoulli_poly_value(2, Rational(1)) == Rational(1, 6));
  for (unsigned n = 0; n <= 12; ++n) {
    CHECK(bernoulli_poly_value(n, Rational(0)) == bernoulli_number(n));
    for (int t = 0; t < 3; ++t) {
      Rational x = gen::rational();
      CHECK(bernoulli_poly_value(n, x) == bernoulli_poly_by_binomials(n, x));
    }
  }
}

TEST_CASE("Chern characters of Hodge bundles") {
  TautRing k = TautRing::kappa(8u);
  CHECK(ch_hodge(1, 1, 3, k) == k.kappa(1) * Rational(1, 12));
  CHECK(ch_hodge(2, 1, 3, k).is_zero());
  for (int g = 2; g <= 6; ++g) {
    for (int r : {2, 4, 6, 8}) CHECK(ch_hodge(r, 1, g).is_zero());
    for (int q = 1; q <= 5; ++q) {
      GradedPoly c0 = ch_hodge(0, q, g, true);
      CHECK(c0.constant_term() == Rational((2 * q - 1) * (g - 1)));
      CHECK(c0.size() == 1);
    }
  }
  // general coefficient against the binomial form of B_{r+1}(q)
  for (int r = 0; r <= 6; ++r)
    for (int q = 1; q <= 4; ++q) {
      TautRing ring = TautRing::kappa(static_cast<unsigned>(r));
      CHECK(ch_hodge(r, q, 2, ring) ==
            ring.kappa(r) * (bernoulli_poly_by_binomials(r + 1, Rational(q)) / factorial(r + 1)));
    }
}

TEST_CASE("Newton identities") {
  TablePtr t = make_table({{"x", 1}, {"y", 2}});
  GradedPoly x = GradedPoly::generator(t, "x"), y = GradedPoly::generator(t, "y");
  ChernData ch{ChernData::Kind::character, 2, {x}};
  CHECK(chern_from_ch(ch).components == std::vector<GradedPoly>{x});

  ChernData ch2{ChernData::Kind::character, 2, {x, y}};
  CHECK(chern_from_ch(ch2).components[1] == (x * x - y * Rational(2)) * Rational(1, 2));

  // split bundle with roots a_i: c_k = e_k, ch_k = p_k / k!
  TablePtr s = make_table({{"t", 1}});
  GradedPoly tt = GradedPoly::generator(s, "t");
  for (int rep = 0; rep < 20; ++rep) {
    Alphabet roots = gen::alphabet(6);
    ChernData c{ChernData::Kind::chern, static_cast<long>(roots.size()), {}};
    for (unsigned k = 1; k <= 8; ++k) c.components.push_back(tt.pow(k) * eval_e(k, roots));
    ChernData out = ch_from_chern(c);
    for (unsigned k = 1; k <= 8; ++k)
      CHECK(out.components[k - 1] == tt.pow(k) * (oracle::power_sum(k, roots) / factorial(k)));
  }
}

TEST_CASE("Newton round trip on random data") {
  TablePtr t = make_table({{"x", 1}, {"y", 2}, {"z", 3}});
  for (int rep = 0; rep < 100; ++rep) {
    ChernData c = random_chern_data(ChernData::Kind::chern, t, 10);
    CHECK(chern_from_ch(ch_from_chern(c)).components == c.components);
    ChernData ch = random_chern_data(ChernData::Kind::character, t, 10);
    CHECK(ch_from_chern(chern_from_ch(ch)).components == ch.components);
  }
}

TEST_CASE("Todd series") {
  CHECK(todd_series(2).coefficients() == std::vector<Rational>{1, Rational(-1, 2), Rational(1, 12)});
  CHECK(todd_series(5)[3].is_zero());
  CHECK(todd_series(0).coefficients() == std::vector<Rational>{1});
  PowerSeries td = todd_series(14);
  for (unsigned n = 0; n <= 14; ++n) CHECK(td[n] == oracle::bernoulli_by_recurrence(n)[n] / factorial(n));
}

TEST_CASE("GRR expansion") {
  TautRing mm = TautRing::mumford_morita(3u);
  CHECK(grr_ch_P(0, mm) == mm.m(1, 0) - mm.m(0, 1) * Rational(1, 2));
  CHECK(grr_ch_P(1, mm) == mm.m(2, 0) * Rational(1, 2) - mm.m(1, 1) * Rational(1, 2) + mm.m(0, 2) * Rational(1, 12));
  CHECK(grr_ch_P(2, mm) == mm.m(3, 0) * Rational(1, 6) - mm.m(2, 1) * Rational(1, 4) + mm.m(1, 2) * Rational(1, 12));
  for (int k = 0; k <= 8; ++k) {
    TautRing ring = TautRing::mumford_morita(static_cast<unsigned>(k));
    GradedPoly expected = ring.zero();
    for (int i = 0; i <= k + 1; ++i)
      expected += ring.m(i, k + 1 - i) * grr_coefficient(static_cast<unsigned>(i), static_cast<unsigned>(k + 1 - i));
    CHECK(grr_ch_P(k, ring) == expected);
    CHECK(grr_ch_P(k, ring).is_homogeneous());
  }
}

TEST_CASE("closed formula and its comparison with the expansion") {
  TautRing mm = TautRing::mumford_morita(3u);
  CHECK(ch_P_stated(1, mm) == mm.m(2, 0) * Rational(1, 2) - mm.m(1, 1) * Rational(1, 2));
  CHECK(ch_P_stated(2, mm) == grr_ch_P(2, mm));
  CHECK(ch_P_stated(3, mm) ==
        mm.m(4, 0) * Rational(1, 24) - mm.m(3, 1) * Rational(1, 12) + mm.m(2, 2) * Rational(1, 12));
  CHECK_THROWS_AS(ch_P_stated(0, mm), DomainError);

  CHECK(compare_ch_P(2).empty());

  auto k1 = compare_ch_P(1);
  REQUIRE(k1.size() == 1);
  CHECK(k1[0].i == 0);
  CHECK(k1[0].j == 2);
  CHECK(k1[0].delta() == Rational(1, 12));
  CHECK(k1[0].kind == ChPDelta::Kind::omitted_boundary_term);

  auto k3 = compare_ch_P(3);
  REQUIRE(k3.size() == 2);
  for (const auto& d : k3) {
    if (d.i == 2 && d.j == 2) {
      CHECK(d.expansion == Rational(1, 24));
      CHECK(d.stated == Rational(1, 12));
      CHECK(d.kind == ChPDelta::Kind::denominator_mismatch);
    } else {
      CHECK(d.i == 0);
      CHECK(d.j == 4);
      CHECK(d.expansion == Rational(-1, 720));
      CHECK(d.kind == ChPDelta::Kind::omitted_boundary_term);
    }
  }
  for (int k : {4, 5, 6, 7})
    for (const auto& d : compare_ch_P(k)) CHECK(d.kind != ChPDelta::Kind::other);
}
