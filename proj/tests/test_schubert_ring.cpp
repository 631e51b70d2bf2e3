#include "doctest.h"
#include "generators.hpp"
#include "sato/errors.hpp"
#include "sato/oracles.hpp"
#include "sato/schubert.hpp"

using namespace sato;

namespace {

SchubertClass s(std::initializer_list<int> parts) { return SchubertClass::basis(Partition(parts)); }

SchubertClass random_class(int max_size) {
  SchubertClass x;
  for (int t = 0; t < 3; ++t) x.add_term(gen::partition(max_size), gen::rational());
  return x;
}

// Product read off the Schur-polynomial oracle.
SchubertClass product_by_oracle(const Partition& a, const Partition& b) {
  SchubertClass out;
  unsigned vars = static_cast<unsigned>(std::max(1, a.size() + b.size()));
  for (const auto& [nu, c] : oracle::lr_by_schur_polynomials(a, b, vars)) out.add_term(nu, Rational(c));
  return out;
}

}  // namespace

TEST_CASE("Schubert product examples") {
  CHECK(schubert_product(s({1}), s({1})) == s({2}) + s({1, 1}));
  CHECK(schubert_product(s({1}), s({1})) == product_by_oracle(Partition{1}, Partition{1}));
  CHECK(schubert_product(s({2}), s({1, 1})) == s({3, 1}) + s({2, 1, 1}));
  CHECK(schubert_product(s({3, 1}), SchubertClass::unit()) == s({3, 1}));
  CHECK(schubert_product(s({1}), s({1})).str() == "s(2) + s(1,1)");
  CHECK(SchubertClass().str() == "0");
  CHECK(SchubertClass::unit().str() == "1");
  CHECK((s({2}) * Rational(-1, 2) + s({1})).str() == "s(1) - 1/2*s(2)");
  CHECK_THROWS_AS(schubert_product(SchubertClass::basis(Partition{1}, 0), SchubertClass::basis(Partition{1}, 1)),
                  StructuralError);
}

TEST_CASE("box truncation is the only place a box enters") {
  SchubertClass x = schubert_product(s({2}), s({2}));
  CHECK(x == s({4}) + s({3, 1}) + s({2, 2}));
  CHECK(x.truncate_to_box(2, 2) == s({2, 2}));
}

TEST_CASE("Schubert product is associative and commutative") {
  for (int t = 0; t < 40; ++t) {
    SchubertClass a = random_class(3), b = random_class(3), c = random_class(3);
    CHECK(schubert_product(schubert_product(a, b), c) == schubert_product(a, schubert_product(b, c)));
    CHECK(schubert_product(a, b) == schubert_product(b, a));
  }
}

TEST_CASE("expansion in the c generators") {
  TablePtr t = c_table(4);
  GradedPoly c1 = GradedPoly::generator(t, "c_1"), c2 = GradedPoly::generator(t, "c_2");
  CHECK(expand_in_generators(s({2}), t) == c1 * c1 - c2);
  for (int r = 1; r <= 4; ++r)
    CHECK(expand_in_generators(SchubertClass::basis(Partition::column(r)), t) ==
          GradedPoly::generator(t, "c_" + std::to_string(r)));
  CHECK(expand_in_generators(SchubertClass::unit(), t) == GradedPoly::constant(t, Rational(1)));
  CHECK(expand_in_generators(SchubertClass::unit()).constant_term() == Rational(1));
}

TEST_CASE("expansion is a ring homomorphism and round-trips") {
  TablePtr t = c_table(8);
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; a + b <= 8; ++b)
      for (const auto& l : partitions_of(a))
        for (const auto& m : partitions_of(b)) {
          SchubertClass prod = product_by_oracle(l, m);
          CHECK(expand_in_generators(prod, t) == expand_in_generators(SchubertClass::basis(l), t) *
                                                     expand_in_generators(SchubertClass::basis(m), t));
        }
  for (int t2 = 0; t2 < 50; ++t2) {
    SchubertClass x = random_class(7);
    CHECK(evaluate_c_polynomial(expand_in_generators(x, t)) == x);
  }
}
