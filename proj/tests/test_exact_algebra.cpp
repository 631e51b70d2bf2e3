#include "doctest.h"
#include "generators.hpp"
#include "sato/errors.hpp"
#include "sato/graded_poly.hpp"
#include "sato/power_series.hpp"
#include "sato/rational.hpp"

using namespace sato;

namespace {

TablePtr moduli_table() { return make_table({{"psi", 1}, {"lambda_1", 1}, {"lambda_2", 2}, {"lambda_3", 3}}); }

bool lowest_terms(const Rational& r) { return gcd(r.numerator(), r.denominator()) == 1 && r.denominator() > 0; }

}  // namespace

TEST_CASE("rational arithmetic stays normalized") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(factorial(5) == Rational(120));
  CHECK(binomial(6, 2) == Rational(15));
  CHECK(binomial(3, 5) == Rational(0));
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));

  for (int t = 0; t < 500; ++t) {
    Rational a = gen::rational(), b = gen::nonzero_rational();
    CHECK(lowest_terms(a + b));
    CHECK(lowest_terms(a - b));
    CHECK(lowest_terms(a * b));
    CHECK(lowest_terms(a / b));
    CHECK((a / b) * b == a);
  }
}

TEST_CASE("graded polynomial examples") {
  TablePtr t = moduli_table();
  GradedPoly psi = GradedPoly::generator(t, "psi");
  GradedPoly l1 = GradedPoly::generator(t, "lambda_1");
  GradedPoly one = GradedPoly::constant(t, Rational(1));

  CHECK((psi + l1) * l1 == psi * l1 + l1 * l1);
  GradedPoly x = psi * Rational(3) - l1.pow(2);
  CHECK(x * one == x);

  GradedPoly psi1 = GradedPoly::generator(t, "psi", 1u);
  GradedPoly one1 = GradedPoly::constant(t, Rational(1), 1u);
  CHECK((one1 - psi1 * Rational(2)) * (one1 + psi1 * Rational(2)) == one1);

  GradedPoly l2 = GradedPoly::generator(t, "lambda_2");
  GradedPoly mixed = psi * l2 + l1;
  CHECK(mixed.degree() == 3u);
  CHECK_FALSE(mixed.is_homogeneous());
  CHECK(mixed.homogeneous_part(1) == l1);
  CHECK(GradedPoly(t).degree() == std::nullopt);
  CHECK(mixed.set_zero({"psi"}) == l1);
}

TEST_CASE("graded polynomial structural errors") {
  TablePtr t = moduli_table();
  TablePtr other = make_table({{"omega", 1}});
  CHECK_THROWS_AS(GradedPoly::generator(t, "psi") + GradedPoly::generator(other, "omega"), StructuralError);
  CHECK_THROWS_AS(GradedPoly::generator(t, "psi", 2u) * GradedPoly::generator(t, "psi"), StructuralError);
  CHECK_THROWS_AS(GradedPoly::generator(t, "kappa_1"), StructuralError);
}

TEST_CASE("substitution is a ring homomorphism") {
  TablePtr src = make_table({{"a", 1}, {"b", 2}});
  TablePtr dst = moduli_table();
  std::vector<GradedPoly> images{gen::poly(dst, std::nullopt, 1, 3).homogeneous_part(1),
                                 gen::poly(dst, std::nullopt, 2, 4).homogeneous_part(2)};
  for (int t = 0; t < 50; ++t) {
    GradedPoly p = gen::poly(src, std::nullopt, 6), q = gen::poly(src, std::nullopt, 6);
    CHECK((p * q).substitute(images) == p.substitute(images) * q.substitute(images));
    CHECK((p + q).substitute(images) == p.substitute(images) + q.substitute(images));
  }
}

TEST_CASE("ring axioms on random triples") {
  TablePtr t = moduli_table();
  for (unsigned cap = 0; cap <= 12; ++cap) {
    for (int rep = 0; rep < 8; ++rep) {
      GradedPoly a = gen::poly(t, cap, 12), b = gen::poly(t, cap, 12), c = gen::poly(t, cap, 12);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a - a == GradedPoly(t, cap));
      if (auto d = (a * b).degree()) CHECK(*d <= cap);
    }
  }
}

TEST_CASE("power series examples") {
  PowerSeries s("x", {1, 1}, 3);
  CHECK(series_inverse(s).coefficients() == std::vector<Rational>{1, -1, 1, -1});
  CHECK(series_inverse(PowerSeries("x", {2}, 0)).coefficients() == std::vector<Rational>{Rational(1, 2)});

  // (e^t - 1)/t = sum t^n/(n+1)!
  std::vector<Rational> c;
  for (unsigned n = 0; n <= 4; ++n) c.push_back(Rational(1) / factorial(n + 1));
  PowerSeries inv = series_inverse(PowerSeries("t", c, 4));
  CHECK(inv.coefficients() ==
        std::vector<Rational>{1, Rational(-1, 2), Rational(1, 12), 0, Rational(-1, 720)});

  CHECK(series_exp(PowerSeries::identity("x", 3)).coefficients() ==
        std::vector<Rational>{1, 1, Rational(1, 2), Rational(1, 6)});
  CHECK(series_exp(PowerSeries("x", 4)) == PowerSeries::one("x", 4));
  CHECK(series_exp(PowerSeries("x", {0, 2}, 2)).coefficients() == std::vector<Rational>{1, 2, 2});

  CHECK_THROWS_AS(series_inverse(PowerSeries("x", {0, 1}, 2)), SingularSeriesError);
  CHECK_THROWS_AS(series_exp(PowerSeries("x", {1, 1}, 2)), DomainError);
}

TEST_CASE("series inverse times series is one") {
  for (int t = 0; t < 200; ++t) {
    unsigned order = static_cast<unsigned>(gen::integer(0, 16));
    PowerSeries s = gen::series(order, true);
    CHECK(s * series_inverse(s) == PowerSeries::one("x", order));
  }
}

TEST_CASE("exp turns sums into products") {
  for (int t = 0; t < 50; ++t) {
    unsigned order = static_cast<unsigned>(gen::integer(1, 10));
    PowerSeries a = gen::series(order, false), b = gen::series(order, false);
    a[0] = 0;
    b[0] = 0;
    CHECK(series_exp(a + b) == series_exp(a) * series_exp(b));
  }
}
