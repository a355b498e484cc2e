#pragma once

// Coranks of Gaussian maps for polarized hyperelliptic and plane-quartic
// curves, coranks of the bicanonical and pluricanonical Gaussian maps by
// curve class, and the dimension of the associated ribbon space.

#include <optional>
#include <string>
#include <vector>

#include "curvext/cohomology.hpp"
#include "curvext/curve.hpp"
#include "curvext/types.hpp"

namespace curvext {

struct CorankResult {
  Int cork;                      // exact when mult_cork is certified,
                                 // otherwise a certified upper bound
  Int ker_dim;                   // dim ker of the Gaussian map
  std::optional<Int> mult_cork;  // corank of the multiplication map;
                                 // nullopt when undetermined
  std::string rule;              // which case produced the value
};

// h^0(t*K + L) for t >= 0.
inline Int h0_canonical_twist(const CurveClass& curve, const BundleExpr& L,
                              const Int& t) {
  if (t < 0) throw DomainError("twist must be >= 0");
  const Int g = curve.genus;
  if (const auto* hb = std::get_if<HypBundle>(&L))
    return detail::h0_hyp_ext(g, hb->a + t * (g - 1), hb->k);
  if (const auto* hg = std::get_if<HypGeneral>(&L)) {
    if (hg->d < g + 4)
      throw DomainError(
          "general hyperelliptic bundles are only certified for degree >= genus + 4");
    if (t == 0) return hg->d - g + 1;
    return hg->d + t * (2 * g - 2) - g + 1;  // degree > 2g-2, non-special
  }
  if (const auto* gb = std::get_if<G3Bundle>(&L))
    return detail::h0_g3_sub(gb->c + t, gb->r, gb->aligned);
  throw KindError("canonical twists are implemented for hyperelliptic and genus-3 bundles");
}

// Corank of the multiplication map H0(K) x H0(L) -> H0(K+L).
// Returns 0 in the certified surjective ranges and nullopt (undetermined)
// everywhere else.
inline std::optional<Int> mult_map_corank(const CurveClass& curve,
                                          const BundleExpr& L) {
  const Int g = curve.genus;
  if (curve.kind == CurveKind::Hyperelliptic) {
    if (std::holds_alternative<HypGeneral>(L)) {
      Int d = degree(curve, L);
      if (d >= g + 4) return Int(0);
      return std::nullopt;
    }
    if (std::holds_alternative<HypBundle>(L)) {
      Int d = degree(curve, L);
      if (d >= 2 * g + 3) return Int(0);
      return std::nullopt;
    }
    return std::nullopt;
  }
  if (curve.kind == CurveKind::Genus3Quartic) {
    const auto* gb = std::get_if<G3Bundle>(&L);
    if (!gb) return std::nullopt;
    Int d = degree(curve, L);
    if (d >= 6 && h0_bundle(curve, L) > 0) return Int(0);
    // c*K minus >= 3 points in general position moves in a full-dimensional
    // family, so counts as a general bundle of its degree.
    bool general = !gb->aligned && gb->r >= 3;
    if (general && d >= 4 && d <= 5) return Int(0);
    return std::nullopt;
  }
  return std::nullopt;
}

// dim ker of the Gaussian map of (C, L).
//   hyperelliptic: h^0((g-3)*pencil) * h^0(L - 2*pencil)
//   genus 3:       h^0(L - 3K)
inline Int gaussian_kernel_dim(const CurveClass& curve, const BundleExpr& L) {
  const Int g = curve.genus;
  if (h0_bundle(curve, L) == 0)
    throw DomainError("the kernel formula needs an effective bundle");
  if (curve.kind == CurveKind::Hyperelliptic) {
    Int factor = detail::h0_hyp_ext(g, g - 3, 0);  // = g-2 for g >= 3, 0 for g = 2
    if (const auto* hb = std::get_if<HypBundle>(&L)) {
      Int d2 = 2 * hb->a + hb->k - 4;  // degree of L - 2*pencil
      // Above 2g-2 the twist is non-special whatever the splitting, so
      // Riemann-Roch gives h^0 without needing a >= 2.
      if (d2 > 2 * g - 2) return factor * (d2 - g + 1);
      return factor * detail::h0_hyp_ext(g, hb->a - 2, hb->k);
    }
    const auto& hg = std::get<HypGeneral>(L);
    return factor * (hg.d - g - 3);  // h1(L - 2*pencil) = 0 by assumption
  }
  if (curve.kind == CurveKind::Genus3Quartic) {
    const auto& gb = std::get<G3Bundle>(L);
    return detail::h0_g3_sub(gb.c - 3, gb.r, gb.aligned);
  }
  throw KindError("kernel dimensions are implemented for hyperelliptic and genus-3 curves");
}

// Corank of the Gaussian map of (C, L).
//   hyperelliptic: 2g+2 - g*h1(L) + (g-2)*h1(L - 2*pencil) - cork(mult)
//   genus 3:       h^0(4K - L) - 3*h1(L) - cork(mult)
// If L is not effective of positive degree the Gaussian map has domain 0
// and the corank is h^0(2K + L).
inline CorankResult gaussian_corank(const CurveClass& curve,
                                    const BundleExpr& L) {
  const Int g = curve.genus;
  if (curve.kind != CurveKind::Hyperelliptic &&
      curve.kind != CurveKind::Genus3Quartic)
    throw KindError(
        "Gaussian coranks are implemented for hyperelliptic and genus-3 curves");

  const Int d = degree(curve, L);
  const Int h0L = h0_bundle(curve, L);

  if (h0L == 0 || d <= 0) {
    CorankResult out;
    out.cork = h0_canonical_twist(curve, L, 2);
    out.ker_dim = 0;
    // The multiplication map has source H0(K) x H0(L); its corank keeps the
    // bookkeeping identity exact.
    out.mult_cork = h0_canonical_twist(curve, L, 1) - g * h0L;
    out.rule = "non-effective";
    return out;
  }

  std::optional<Int> mult = mult_map_corank(curve, L);
  CorankResult out;
  out.ker_dim = gaussian_kernel_dim(curve, L);
  out.mult_cork = mult;

  if (curve.kind == CurveKind::Hyperelliptic) {
    Int h1L, h1L2;
    if (d >= 2 * g - 1) {
      h1L = 0;
    } else if (const auto* hb = std::get_if<HypBundle>(&L)) {
      h1L = detail::h1_hyp_ext(g, hb->a, hb->k);
    } else {
      h1L = 0;  // HypGeneral carries the vanishing assertion
    }
    if (d - 4 >= 2 * g - 1) {
      h1L2 = 0;
    } else if (const auto* hb = std::get_if<HypBundle>(&L)) {
      h1L2 = detail::h1_hyp_ext(g, hb->a - 2, hb->k);
    } else {
      h1L2 = 0;
    }
    out.cork = 2 * g + 2 - g * h1L + (g - 2) * h1L2 - (mult ? *mult : Int(0));
    out.rule = mult ? "hyperelliptic-pencil" : "upper-bound";
  } else {
    const auto& gb = std::get<G3Bundle>(L);
    Int h04KL = detail::h0_g3_add(4 - gb.c, gb.r, gb.aligned);
    Int h1L = h0L - d + 2;  // Riemann-Roch at genus 3
    out.cork = h04KL - 3 * h1L - (mult ? *mult : Int(0));
    out.rule = mult ? "genus3-quartic" : "upper-bound";
  }
  return out;
}

// dim P(ker of the transposed Gaussian map) = cork - 1; undetermined coranks
// propagate.
inline std::optional<Int> ribbon_space_dim(const CurveClass& curve,
                                           const BundleExpr& L) {
  CorankResult r = gaussian_corank(curve, L);
  if (!r.mult_cork) return std::nullopt;
  return r.cork - 1;
}

namespace detail {

// h^0(j*K) on a non-hyperelliptic genus-4 curve.
inline Int h0_genus4_pluri(const Int& j) {
  if (j < 0) return 0;
  if (j == 0) return 1;
  if (j == 1) return 4;
  return 6 * j - 3;
}

}  // namespace detail

// Corank of the Gaussian map of (C, m*K) by curve class, m >= 2.
// Optional warnings collect advisories (the genus-3 bicanonical model is
// allowed although property N_2 fails for it).
inline Int pluricanonical_corank(const CurveClass& curve, const Int& m,
                                 std::vector<std::string>* warnings = nullptr) {
  const Int g = curve.genus;
  if (curve.kind == CurveKind::Hyperelliptic ||
      (curve.kind == CurveKind::GeneralClifford && curve.cliff == 0))
    throw KindError("pluricanonical coranks need a non-hyperelliptic curve");
  if (m < 2) throw DomainError("pluricanonical coranks need m >= 2");

  if (g == 3) {
    if (m == 2 && warnings)
      warnings->push_back("property N2 fails for the bicanonical model");
    return h0_genus3_pluri(4 - m);
  }
  if (g == 4)  // complete intersection of a quadric and a cubic
    return detail::h0_genus4_pluri(3 - m) + detail::h0_genus4_pluri(2 - m);

  // g >= 5 from here on.
  if (m > 2) return 0;
  switch (curve.kind) {
    case CurveKind::Trigonal:
      return h0_K_minus_trigonal(g, curve.maroni_a, curve.maroni_b, g - 4);
    case CurveKind::PlaneQuintic:
      return 3;
    case CurveKind::PlaneSextic:
      return 1;  // bi-anticanonical curve on P^2
    case CurveKind::DelPezzoBianticanonical:
      return 1;
    case CurveKind::Bielliptic:
      if (g < 6)
        throw KindError("the bielliptic bicanonical case is only pinned for genus >= 6");
      return 1;
    case CurveKind::GeneralClifford:
      if (curve.cliff == 2 && g == 5) return 3;
      if (curve.cliff >= 3) return 0;
      if (curve.cliff == 2) return 0;
      throw DomainError(
          "Clifford index 1 needs the trigonal or plane-quintic class data");
    default:
      throw KindError("unsupported curve class for pluricanonical coranks");
  }
}

}  // namespace curvext
