#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "curvext/weighted.hpp"

using namespace curvext;

TEST_CASE("weighted monomial counts") {
  CHECK(weighted_monomial_count({1, 1, 1, 3, 3, 3}, 3) == 13);
  CHECK(weighted_monomial_count({1}, 0) == 1);
  CHECK(weighted_monomial_count({1, 1, 1, 1, 2, 2, 2, 2}, 2) == 14);
  CHECK(weighted_monomial_count({1, 1}, -1) == 0);
  CHECK(weighted_monomial_count({2, 3}, 1) == 0);

  // unweighted count is the usual binomial coefficient
  auto binom = [](long long n, long long k) {
    Int out = 1;
    for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
  };
  for (long long vars = 1; vars <= 5; ++vars)
    for (long long m = 0; m <= 7; ++m) {
      std::vector<Int> w(static_cast<std::size_t>(vars), Int(1));
      CHECK(weighted_monomial_count(w, m) == binom(vars + m - 1, m));
    }

  CHECK_THROWS_AS(weighted_monomial_count({1, 0}, 2), DomainError);
  CHECK_THROWS_AS(weighted_monomial_count({1, -2}, 2), DomainError);
}

TEST_CASE("weighted counts satisfy the generating recursion") {
  // adding a variable of weight w: N(weights + [w], m) =
  // sum over j >= 0 of N(weights, m - j*w)
  std::vector<Int> base = {1, 2, 3};
  for (long long w = 1; w <= 3; ++w)
    for (long long m = 0; m <= 12; ++m) {
      std::vector<Int> ext = base;
      ext.push_back(Int(w));
      Int total = 0;
      for (long long j = 0; j * w <= m; ++j)
        total += weighted_monomial_count(base, m - j * w);
      CHECK(weighted_monomial_count(ext, m) == total);
    }
}

TEST_CASE("weighted hypersurface invariants") {
  // quartic in P(1,1,1,3,3,3) embedded by degree-3 monomials
  WeightedHypersurface tri{{1, 1, 1, 3, 3, 3}, 4, 3};
  WhInvariants inv = wh_invariants(tri);
  CHECK(inv.dim == 4);
  CHECK(inv.ambient == 12);
  CHECK(inv.degree == 12);

  // cubic in P(1,1,1,1,2,2,2,2) embedded by quadrics
  WeightedHypersurface quad{{1, 1, 1, 1, 2, 2, 2, 2}, 3, 2};
  inv = wh_invariants(quad);
  CHECK(inv.dim == 6);
  CHECK(inv.ambient == 13);
  CHECK(inv.degree == 12);

  // quintic in P(1,1,1,4,4,4) embedded by quartics
  WeightedHypersurface quin{{1, 1, 1, 4, 4, 4}, 5, 4};
  inv = wh_invariants(quin);
  CHECK(inv.dim == 4);
  CHECK(inv.ambient == 17);
  CHECK(inv.degree == 20);

  // quartic in P(1,1,1,2,2,2,2,2,2) embedded by quadrics
  WeightedHypersurface big{{1, 1, 1, 2, 2, 2, 2, 2, 2}, 4, 2};
  inv = wh_invariants(big);
  CHECK(inv.dim == 7);
  CHECK(inv.ambient == 11);
  CHECK(inv.degree == 8);

  CHECK_THROWS_AS(wh_invariants(WeightedHypersurface{{1, 1}, 2, 1}),
                  DomainError);
  CHECK_THROWS_AS(wh_invariants(WeightedHypersurface{{1, 1, 1}, 0, 1}),
                  DomainError);
  CHECK_THROWS_AS(wh_invariants(WeightedHypersurface{{1, 1, 1}, 2, 0}),
                  DomainError);

  // non-integral degree is rejected: w * m^dim must divide by the weights
  CHECK_THROWS_AS(wh_invariants(WeightedHypersurface{{1, 1, 1, 5}, 2, 1}),
                  IntegralityError);
}
