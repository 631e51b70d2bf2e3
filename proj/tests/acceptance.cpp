#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "sato/verify.hpp"

using namespace sato::verify;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<std::vector<CheckResult>()> run;
};

}  // namespace

int main() {
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  const std::vector<Criterion> criteria{
      {1, "Cauchy identity, 100 alphabets of size 0-8 through order 12",
       [] { return std::vector{check_cauchy(100, 8, 12)}; }},
      {2, "LR coefficients against Schur-polynomial expansion, |lambda|+|mu| <= 8",
       [=] { return std::vector{check_lr_oracle(8, threads)}; }},
      {3, "GKM divisibility, products and rotation for every Gr(l,n) with n <= 6",
       [=] {
         return std::vector{check_gkm_divisibility(6), check_gkm_products(6, threads), check_gkm_rotation(6)};
       }},
      {4, "equivariant limit recovers the ordinary corollaries, r <= 2d+3",
       [] { return std::vector{check_limit(limit_grid())}; }},
      {5, "k1 special values for g = 2..5", [] { return std::vector{check_k1_special(2, 5)}; }},
      {6, "pullback is multiplicative, |lambda|+|mu| <= 8, one map of each kind",
       [=] { return std::vector{check_homomorphism(homomorphism_maps(), 8, threads)}; }},
      {7, "Hodge Chern characters, g <= 6, q <= 5", [] { return std::vector{check_hodge(6, 5)}; }},
      {8, "GRR expansion homogeneous for k <= 8; k=2 agrees; deltas classified for k in {1,3,4}",
       [] { return std::vector{check_grr_homogeneity(8), check_grr_comparison({1, 3, 4})}; }},
      {9, "Newton round trip, 100 instances to degree 10",
       [] { return std::vector{check_chern_roundtrip(100, 10)}; }},
      {10, "codimension and Maya round trip, 1000 cases", [] { return std::vector{check_maya(1000)}; }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::size_t cases = 0;
    std::string detail;
    try {
      for (const auto& r : c.run()) {
        cases += r.cases;
        if (!r.passed) {
          ok = false;
          if (detail.empty()) detail = r.name + ": " + r.detail;
        } else if (!r.detail.empty() && detail.empty()) {
          detail = r.detail;
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%zu cases, %.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), cases,
                secs, detail.empty() ? "" : " | ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
