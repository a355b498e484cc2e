#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "curvext/acceptance.hpp"

using namespace curvext;

TEST_CASE("acceptance criteria") {
  auto results = run_acceptance();
  REQUIRE(results.size() == 11);
  for (const CriterionResult& r : results) {
    std::printf("[criterion %d] %s: %s (%lld checks)%s%s\n", r.index,
                r.name.c_str(), r.passed ? "PASS" : "FAIL", r.checks,
                r.detail.empty() ? "" : " ", r.detail.c_str());
    std::fflush(stdout);
    INFO("criterion " << r.index << " " << r.name << ": " << r.detail);
    CHECK(r.passed);
    CHECK(r.checks > 0);
  }
}
