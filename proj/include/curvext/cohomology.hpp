#pragma once

// Cohomology of line bundles on hyperelliptic curves, trigonal curves and
// plane quartics (genus 3). Everything is closed-form exact arithmetic;
// bundles built from added "general points" assume the points impose
// independent conditions.

#include <algorithm>
#include <cassert>

#include "curvext/curve.hpp"
#include "curvext/types.hpp"

namespace curvext {

namespace detail {

// h^0(a*g + k general points) on a hyperelliptic curve of genus gg, extended
// to negative a as long as no points are added: a negative multiple of the
// pencil has no sections. Negative a combined with added points is outside
// the validity range of the formula.
inline Int h0_hyp_ext(const Int& gg, const Int& a, const Int& k) {
  if (gg < 2) throw DomainError("hyperelliptic formulas need genus >= 2");
  if (k < 0) throw DomainError("point count must be >= 0");
  if (a < 0 && k > 0)
    throw DomainError(
        "negative pencil coefficient with added points is not supported");
  Int lo = (a < gg - 1 ? a : gg - 1) + 1;  // min(a, g-1) + 1
  Int rr = 2 * a + k - gg + 1;             // Riemann-Roch branch
  return max0(lo > rr ? lo : rr);
}

inline Int h1_hyp_ext(const Int& gg, const Int& a, const Int& k) {
  // Riemann-Roch: h1 = h0 - deg + g - 1, exact.
  return h0_hyp_ext(gg, a, k) - (2 * a + k) + gg - 1;
}

inline void check_maroni(const Int& g, const Int& a, const Int& b) {
  if (g < 3) throw DomainError("trigonal formulas need genus >= 3");
  if (a + b != g + 2 || a <= 0 || a > b || b > 2 * a)
    throw MaroniError("Maroni invariants must satisfy a+b=g+2, 0<a<=b<=2a");
}

}  // namespace detail

// h^0 of a*g + k general points, g the degree-2 pencil.
inline Int h0_hyperelliptic(const Int& g, const Int& a, const Int& k) {
  if (a < 0)
    throw DomainError("pencil coefficient must be >= 0");
  return detail::h0_hyp_ext(g, a, k);
}

// h^1 of a*g + k general points.
inline Int h1_hyperelliptic(const Int& g, const Int& a, const Int& k) {
  if (g < 2) throw DomainError("hyperelliptic formulas need genus >= 2");
  if (a < 0) throw DomainError("pencil coefficient must be >= 0");
  if (k < 0) throw DomainError("point count must be >= 0");
  if (a >= g) return 0;
  return max0(g - a - k);
}

// h^0(n*g) on a trigonal curve with Maroni invariants (a, b); g the
// degree-3 pencil, which splits the pushforward to P^1 as
// O(n) + O(n-a) + O(n-b).
inline Int h0_trigonal(const Int& g, const Int& a, const Int& b, const Int& n) {
  detail::check_maroni(g, a, b);
  if (n < 0) throw DomainError("pencil multiple must be >= 0");
  return max0(n + 1) + max0(n - a + 1) + max0(n - b + 1);
}

// h^0(K - n*g) on the same curve, via Riemann-Roch from h0_trigonal.
inline Int h0_K_minus_trigonal(const Int& g, const Int& a, const Int& b,
                               const Int& n) {
  if (n < 0) throw DomainError("pencil multiple must be >= 0");
  Int unclamped = h0_trigonal(g, a, b, n) - 3 * n + g - 1;
  assert(unclamped >= 0);  // equals h1(n*g)
  return max0(unclamped);
}

// h^0 of r points on a smooth plane quartic (genus 3, K = line class);
// `aligned` means all r points lie on one line. A line meets the quartic
// in 4 points, so the flag only matters for r <= 4.
inline Int h0_points_on_quartic(const Int& r, bool aligned) {
  if (r < 0) throw DomainError("point count must be >= 0");
  if (r <= 2) return 1;
  if (r == 3) return aligned ? 2 : 1;
  if (r == 4) return aligned ? 3 : 2;
  return r - 2;
}

// h^0(k*K) on a non-hyperelliptic genus-3 curve.
inline Int h0_genus3_pluri(const Int& k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (k == 1) return 3;
  return 4 * k - 2;
}

namespace detail {

// h^0(c*K - D) on the plane quartic, D a set of r points (aligned or in
// general position). Covers every case with c <= 1 or deg >= 0; the only
// special configuration tracked is D on a line.
inline Int h0_g3_sub(const Int& c, const Int& r, bool aligned) {
  if (r < 0) throw DomainError("point count must be >= 0");
  if (r == 0) return h0_genus3_pluri(c);
  Int deg = 4 * c - r;
  if (deg < 0) return 0;
  if (c == 1) return max0(h0_points_on_quartic(r, aligned) + 2 - r);
  // c >= 2 here (c = 0 with r > 0 has deg < 0). The bundle is non-special
  // except when D is a full line section, i.e. c = 2, r = 4 aligned, where
  // 2K - D = K.
  Int h1 = (c == 2 && r == 4 && aligned) ? 1 : 0;
  return max0(deg - 2 + h1);
}

// h^0(j*K + D), D a set of r points.
inline Int h0_g3_add(const Int& j, const Int& r, bool aligned) {
  if (r < 0) throw DomainError("point count must be >= 0");
  if (r == 0) return h0_genus3_pluri(j);
  if (j == 0) return h0_points_on_quartic(r, aligned);
  if (j >= 1) return 4 * j + r - 2;  // deg >= 5, h1 = h0(-D + (1-j)K) = 0
  Int v = (4 * j + r - 2) + h0_g3_sub(1 - j, r, aligned);  // Riemann-Roch
  assert(v >= 0);
  return v;
}

}  // namespace detail

// h^0 and h^1 of a bundle expression on its curve.
inline Int h0_bundle(const CurveClass& curve, const BundleExpr& L) {
  const Int g = curve.genus;
  if (const auto* hb = std::get_if<HypBundle>(&L)) {
    if (curve.kind != CurveKind::Hyperelliptic)
      throw KindError("pencil bundle expression needs a hyperelliptic curve");
    return detail::h0_hyp_ext(g, hb->a, hb->k);
  }
  if (const auto* hg = std::get_if<HypGeneral>(&L)) {
    if (curve.kind != CurveKind::Hyperelliptic)
      throw KindError("general hyperelliptic bundle needs a hyperelliptic curve");
    if (hg->d < g + 4)
      throw DomainError(
          "general hyperelliptic bundles are only certified for degree >= genus + 4");
    return hg->d - g + 1;
  }
  if (const auto* tb = std::get_if<TrigBundle>(&L)) {
    if (curve.kind != CurveKind::Trigonal)
      throw KindError("trigonal bundle expression needs a trigonal curve");
    if (tb->c_K == 0)
      return tb->n < 0 ? Int(0) : h0_trigonal(g, curve.maroni_a, curve.maroni_b, tb->n);
    if (tb->c_K != 1) throw DomainError("canonical coefficient must be 0 or 1");
    if (tb->n < 0)
      return h0_K_minus_trigonal(g, curve.maroni_a, curve.maroni_b, -tb->n);
    if (tb->n == 0) return g;          // K itself
    return g - 1 + 3 * tb->n;          // K + n*g is non-special for n >= 1
  }
  const auto& gb = std::get<G3Bundle>(L);
  if (curve.kind != CurveKind::Genus3Quartic)
    throw KindError("plane-quartic bundle expression needs the genus-3 kind");
  return detail::h0_g3_sub(gb.c, gb.r, gb.aligned);
}

inline Int h1_bundle(const CurveClass& curve, const BundleExpr& L) {
  // Riemann-Roch: h1 = h0 - deg + g - 1.
  return h0_bundle(curve, L) - degree(curve, L) + curve.genus - 1;
}

// h^0(4K - L) on the plane quartic knowing only deg L = d and whether the
// 16 - d residual points are aligned; for d > 16 the bundle has negative
// degree.
inline Int h0_fourK_minus_L_by_degree(const Int& d, bool aligned) {
  if (d > 16) return 0;
  return h0_points_on_quartic(16 - d, aligned);
}

}  // namespace curvext
