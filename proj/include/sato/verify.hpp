#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sato/krichever.hpp"

namespace sato::verify {

struct CheckResult {
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first failure, or a note

  void fail(const std::string& what) {
    if (passed) detail = what;
    passed = false;
  }
};

/// Runs body(i) for i in [0, count) on up to `threads` workers and returns
/// the results in index order.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned threads, const std::function<T(std::size_t)>& body);

inline constexpr std::uint64_t kDefaultSeed = 20261018;

// Exact identity checks. Each returns one line of the report.
CheckResult check_cauchy(unsigned alphabets, unsigned max_size, unsigned order, std::uint64_t seed = kDefaultSeed);
CheckResult check_h_e_duality(unsigned alphabets, unsigned max_size, unsigned max_k, std::uint64_t seed = kDefaultSeed);
CheckResult check_lr_oracle(int max_total, unsigned threads = 1);
CheckResult check_lr_symmetry(int max_total);
CheckResult check_schubert_expansion(int max_total);

CheckResult check_gkm_divisibility(int max_n);
CheckResult check_gkm_products(int max_n, unsigned threads = 1);
CheckResult check_gkm_rotation(int max_n);
CheckResult check_gkm_solve(int max_n);

CheckResult check_limit(const std::vector<PullbackMap>& maps);
CheckResult check_k1_special(int g_min, int g_max);
CheckResult check_homomorphism(const std::vector<PullbackMap>& maps, int max_total, unsigned threads = 1);
CheckResult check_pullback_grading(const std::vector<PullbackMap>& maps);

CheckResult check_bernoulli(unsigned max_n);
CheckResult check_hodge(int g_max, int q_max);
CheckResult check_todd(unsigned order);
CheckResult check_grr_homogeneity(int max_k);
/// compare_ch_P(2) empty and every delta for the given k classified.
CheckResult check_grr_comparison(const std::vector<int>& ks);

CheckResult check_chern_roundtrip(unsigned instances, unsigned degree, std::uint64_t seed = kDefaultSeed);
CheckResult check_chern_roots(unsigned instances, unsigned degree, std::uint64_t seed = kDefaultSeed);

CheckResult check_maya(unsigned cases, std::uint64_t seed = kDefaultSeed);

/// Maps used by the pullback suites: the parameter grids of the invariants.
std::vector<PullbackMap> limit_grid();
std::vector<PullbackMap> homomorphism_maps();
/// kq with q, g in {2,3}; k1 with g in {2,3,4}; line (2,5) and (3,8).
std::vector<PullbackMap> homomorphism_grid();

/// Named suite: cauchy, lr, gkm, newton, grr, pullback, combinatorics, all.
/// Throws std::invalid_argument for an unknown name.
std::vector<CheckResult> run_suite(const std::string& name, int max_degree, unsigned threads = 1);
const std::vector<std::string>& suite_names();

}  // namespace sato::verify

#include "sato/verify_parallel.hpp"
