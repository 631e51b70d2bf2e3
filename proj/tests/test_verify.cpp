#include "doctest.h"
#include "sato/verify.hpp"

using namespace sato;

TEST_CASE("parallel map keeps index order") {
  auto out = verify::parallel_map<int>(100, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  REQUIRE(out.size() == 100);
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i * i));
  CHECK(verify::parallel_map<int>(0, 3, [](std::size_t) { return 1; }).empty());
}

TEST_CASE("suites give the same report on any number of threads") {
  for (const std::string suite : {"lr", "pullback"}) {
    auto one = verify::run_suite(suite, 5, 1);
    auto many = verify::run_suite(suite, 5, 4);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      CHECK(one[i].passed);
      CHECK(one[i].name == many[i].name);
      CHECK(one[i].cases == many[i].cases);
      CHECK(one[i].detail == many[i].detail);
    }
  }
  CHECK_THROWS_AS(verify::run_suite("nonsense", 4), std::invalid_argument);
}

TEST_CASE("a failing check reports its first failure") {
  verify::CheckResult r("demo");
  r.fail("first");
  r.fail("second");
  CHECK_FALSE(r.passed);
  CHECK(r.detail == "first");
}
