#pragma once

// Numerical invariants of hypersurfaces in weighted projective space,
// polarized by a multiple of the hyperplane class.

#include <vector>

#include "curvext/types.hpp"

namespace curvext {

// Number of monomials of weighted degree m in variables of the given
// positive weights (0 for m < 0).
inline Int weighted_monomial_count(const std::vector<Int>& weights,
                                   const Int& m) {
  for (const Int& w : weights)
    if (w <= 0) throw DomainError("weights must be positive");
  if (m < 0) return 0;
  long long M = to_ll(m, "weighted degree");
  std::vector<Int> ways(static_cast<std::size_t>(M) + 1, Int(0));
  ways[0] = 1;
  for (const Int& w : weights) {
    long long wl = to_ll(w, "weight");
    for (long long j = wl; j <= M; ++j)
      ways[static_cast<std::size_t>(j)] += ways[static_cast<std::size_t>(j - wl)];
  }
  return ways[static_cast<std::size_t>(M)];
}

struct WeightedHypersurface {
  std::vector<Int> weights;
  Int w;  // degree of the defining equation
  Int m;  // multiple of the hyperplane class giving the embedding
};

struct WhInvariants {
  Int dim;
  Int ambient;  // the model spans P^ambient
  Int degree;
};

// dim = #weights - 2; ambient from the monomial count in degree m minus the
// multiples of the equation; degree = w * m^dim / prod(weights). The degree
// formula presumes quasi-smoothness, and a non-integral value signals that
// the assumption fails for this input.
inline WhInvariants wh_invariants(const WeightedHypersurface& X) {
  if (X.weights.size() < 3)
    throw DomainError("a hypersurface model needs at least 3 weights");
  if (X.w <= 0) throw DomainError("equation degree must be positive");
  if (X.m <= 0) throw DomainError("embedding multiple must be positive");
  Int dim = Int(static_cast<long long>(X.weights.size())) - 2;
  Int ambient = weighted_monomial_count(X.weights, X.m) -
                weighted_monomial_count(X.weights, Int(X.m - X.w)) - 1;
  Int prod = 1;
  for (const Int& w : X.weights) prod *= w;
  Int num = X.w;
  long long dl = to_ll(dim, "dimension");
  for (long long i = 0; i < dl; ++i) num *= X.m;
  if (num % prod != 0)
    throw IntegralityError(
        "degree w*m^dim is not divisible by the weight product; "
        "quasi-smoothness fails for this input");
  return {dim, ambient, Int(num / prod)};
}

}  // namespace curvext
