#include "doctest.h"
#include "generators.hpp"
#include "sato/oracles.hpp"
#include "sato/symmetric.hpp"

using namespace sato;

TEST_CASE("complete and elementary symmetric function examples") {
  Alphabet a{2, 3, 4};
  CHECK(eval_h(1, a) == oracle::h_by_monomials(1, a));
  CHECK(eval_h(1, a) == Rational(9));
  CHECK(eval_h(0, a) == Rational(1));
  CHECK(eval_h(0, {}) == Rational(1));
  CHECK(eval_h(2, {1, 2}) == oracle::h_by_monomials(2, {1, 2}));
  CHECK(eval_h(2, {1, 2}) == Rational(7));
  CHECK(eval_e(2, {1, 2, 3}) == oracle::e_by_subsets(2, {1, 2, 3}));
  CHECK(eval_e(2, {1, 2, 3}) == Rational(11));
  CHECK(eval_e(4, {1, 2, 3}) == Rational(0));
  CHECK(eval_e(0, {}) == Rational(1));
  CHECK(eval_h(3, {0, 0, 5}) == Rational(125));
  CHECK(eval_e(2, {2, 2, 2}) == Rational(12));
}

TEST_CASE("cauchy coefficient examples") {
  CHECK(cauchy_coeffs({1}, 3) == std::vector<Rational>{1, -1, 1, -1});
  CHECK(cauchy_coeffs({2, 3, 4}, 1) == std::vector<Rational>{1, -oracle::h_by_monomials(1, {2, 3, 4})});
  CHECK(cauchy_coeffs({2, 3, 4}, 1) == std::vector<Rational>{1, -9});
  CHECK(cauchy_coeffs({}, 3) == std::vector<Rational>{1, 0, 0, 0});
}

TEST_CASE("cauchy identity on random alphabets") {
  for (int t = 0; t < 100; ++t) {
    Alphabet a = gen::alphabet(8);
    auto c = cauchy_coeffs(a, 12);
    for (unsigned m = 0; m <= 12; ++m) {
      Rational h = oracle::h_by_monomials(m, a);
      CHECK(c[m] == (m % 2 ? -h : h));
    }
  }
}

TEST_CASE("h and e duality on random alphabets") {
  for (int t = 0; t < 100; ++t) {
    Alphabet a = gen::alphabet(8);
    for (unsigned k = 1; k <= 10; ++k) {
      Rational acc;
      for (unsigned m = 0; m <= k; ++m) acc += (m % 2 ? Rational(-1) : Rational(1)) * eval_e(m, a) * eval_h(k - m, a);
      CHECK(acc.is_zero());
      CHECK(eval_e(k, a) == oracle::e_by_subsets(k, a));
    }
  }
}

TEST_CASE("Littlewood-Richardson examples") {
  auto check_against_oracle = [](const Partition& l, const Partition& m) {
    unsigned vars = static_cast<unsigned>(std::max(1, l.size() + m.size()));
    CHECK(lr_coefficients(l, m) == oracle::lr_by_schur_polynomials(l, m, vars));
  };
  CHECK(lr_coefficients(Partition{1}, Partition{1}) == LRResult{{Partition{2}, 1}, {Partition{1, 1}, 1}});
  check_against_oracle(Partition{1}, Partition{1});
  CHECK(lr_coefficients(Partition{2}, Partition{1, 1}) == LRResult{{Partition{3, 1}, 1}, {Partition{2, 1, 1}, 1}});
  check_against_oracle(Partition{2}, Partition{1, 1});
  CHECK(lr_coefficients(Partition{3, 1}, Partition{}) == LRResult{{Partition{3, 1}, 1}});
  // the first coefficient above 1
  CHECK(lr_coefficients(Partition{2, 1}, Partition{2, 1}).at(Partition{3, 2, 1}) == 2);
  check_against_oracle(Partition{2, 1}, Partition{2, 1});
}

TEST_CASE("Littlewood-Richardson against Schur polynomials, exhaustive to total 8") {
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; a + b <= 8; ++b)
      for (const auto& l : partitions_of(a))
        for (const auto& m : partitions_of(b)) {
          unsigned vars = static_cast<unsigned>(std::max(1, a + b));
          LRResult fast = lr_coefficients(l, m);
          CHECK(fast == oracle::lr_by_schur_polynomials(l, m, vars));
          CHECK(fast == lr_coefficients(m, l));
        }
}

TEST_CASE("dual Jacobi-Trudi") {
  TablePtr t = elementary_table(4);
  GradedPoly e1 = GradedPoly::generator(t, "e_1"), e2 = GradedPoly::generator(t, "e_2");
  CHECK(dual_jacobi_trudi(Partition{2}, t) == e1 * e1 - e2);
  for (int r = 1; r <= 4; ++r)
    CHECK(dual_jacobi_trudi(Partition::column(r), t) == GradedPoly::generator(t, "e_" + std::to_string(r)));
  CHECK(dual_jacobi_trudi(Partition{}, t) == GradedPoly::constant(t, Rational(1)));
  // s_(2,1) = e_2 e_1 - e_3
  GradedPoly e3 = GradedPoly::generator(t, "e_3");
  CHECK(dual_jacobi_trudi(Partition{2, 1}, t) == e2 * e1 - e3);
}

TEST_CASE("dual Jacobi-Trudi evaluated on an alphabet matches the Schur polynomial") {
  // det(e_{lambda'_i - i + j}) and det(h_{lambda_i - i + j}) are both s_lambda
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      Alphabet a = gen::alphabet(5);
      TablePtr t = elementary_table(static_cast<unsigned>(n));
      std::vector<GradedPoly> images;
      TablePtr scalars = make_table({});
      for (int r = 1; r <= n; ++r) images.push_back(GradedPoly::constant(scalars, eval_e(static_cast<unsigned>(r), a)));
      Rational via_e = dual_jacobi_trudi(lambda, t).substitute(images).constant_term();
      std::vector<GradedPoly> h_images;
      for (int r = 1; r <= n; ++r) h_images.push_back(GradedPoly::constant(scalars, eval_h(static_cast<unsigned>(r), a)));
      Rational via_h = dual_jacobi_trudi(conjugate(lambda), t).substitute(h_images).constant_term();
      CHECK(via_e == via_h);
    }
}
