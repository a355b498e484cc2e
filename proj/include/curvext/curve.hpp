#pragma once

// Curve classes (by gonality/Clifford data) and the line-bundle expressions
// the rest of the library understands.

#include <optional>
#include <string>
#include <variant>

#include "curvext/types.hpp"

namespace curvext {

enum class CurveKind {
  Hyperelliptic,
  Trigonal,
  Genus3Quartic,
  PlaneQuintic,
  PlaneSextic,
  Bielliptic,
  DelPezzoBianticanonical,
  GeneralClifford,
};

inline const char* to_string(CurveKind k) {
  switch (k) {
    case CurveKind::Hyperelliptic: return "hyperelliptic";
    case CurveKind::Trigonal: return "trigonal";
    case CurveKind::Genus3Quartic: return "genus3-quartic";
    case CurveKind::PlaneQuintic: return "plane-quintic";
    case CurveKind::PlaneSextic: return "plane-sextic";
    case CurveKind::Bielliptic: return "bielliptic";
    case CurveKind::DelPezzoBianticanonical: return "del-pezzo-bianticanonical";
    case CurveKind::GeneralClifford: return "general-clifford";
  }
  return "?";
}

struct CurveClass {
  CurveKind kind;
  Int genus;
  // Trigonal only: Maroni invariants (a, b) with a + b = genus + 2,
  // 0 < a <= b <= 2a.
  Int maroni_a = 0;
  Int maroni_b = 0;
  // GeneralClifford only.
  Int cliff = 0;

  static CurveClass hyperelliptic(Int g) {
    if (g < 2) throw DomainError("hyperelliptic curve needs genus >= 2");
    return {CurveKind::Hyperelliptic, std::move(g)};
  }

  static CurveClass trigonal(Int g, Int a, Int b) {
    if (g < 3) throw DomainError("trigonal curve needs genus >= 3");
    if (a + b != g + 2 || a <= 0 || a > b || b > 2 * a)
      throw MaroniError("Maroni invariants must satisfy a+b=g+2, 0<a<=b<=2a");
    CurveClass c{CurveKind::Trigonal, std::move(g)};
    c.maroni_a = std::move(a);
    c.maroni_b = std::move(b);
    return c;
  }

  static CurveClass genus3_quartic() {
    return {CurveKind::Genus3Quartic, 3};
  }

  static CurveClass plane_quintic() { return {CurveKind::PlaneQuintic, 6}; }

  static CurveClass plane_sextic() { return {CurveKind::PlaneSextic, 10}; }

  static CurveClass bielliptic(Int g) {
    if (g < 4) throw DomainError("bielliptic case needs genus >= 4");
    return {CurveKind::Bielliptic, std::move(g)};
  }

  static CurveClass del_pezzo_bianticanonical(Int g) {
    if (g < 3 || g > 10)
      throw DomainError("bi-anticanonical del Pezzo curve needs 3 <= genus <= 10");
    return {CurveKind::DelPezzoBianticanonical, std::move(g)};
  }

  static CurveClass general_clifford(Int g, Int c) {
    if (g < 4) throw DomainError("general Clifford class needs genus >= 4");
    if (c < 0 || 2 * c > g - 1)
      throw DomainError("Clifford index must satisfy 0 <= c <= (g-1)/2");
    CurveClass cc{CurveKind::GeneralClifford, std::move(g)};
    cc.cliff = std::move(c);
    return cc;
  }
};

// Clifford index by curve class. Pinned values only; classes whose index
// depends on unrecorded data raise DomainError.
inline Int clifford_index_of(const CurveClass& c) {
  switch (c.kind) {
    case CurveKind::Hyperelliptic:
      return 0;
    case CurveKind::Trigonal:
      if (c.genus < 4) throw DomainError("Clifford index needs genus >= 4");
      return 1;
    case CurveKind::PlaneQuintic:
      return 1;
    case CurveKind::PlaneSextic:
      return 2;
    case CurveKind::Bielliptic:
      if (c.genus < 6)
        throw DomainError("bielliptic Clifford index is only pinned for genus >= 6");
      return 2;
    case CurveKind::DelPezzoBianticanonical:
      return 2;
    case CurveKind::GeneralClifford:
      return c.cliff;
    case CurveKind::Genus3Quartic:
      throw DomainError("Clifford index needs genus >= 4");
  }
  throw DomainError("unknown curve kind");
}

// --- Line-bundle expressions -------------------------------------------
//
// HypBundle   a*g + k added general points on a hyperelliptic curve
//             (g the degree-2 pencil class).
// HypGeneral  a general bundle of degree d on a hyperelliptic curve;
//             carries the assertion h1(L) = h1(L - 2g) = 0, valid for
//             d >= genus + 4.
// TrigBundle  cK*K + n*g on a trigonal curve (cK = 0 or 1, g the
//             degree-3 pencil class).
// G3Bundle    c*K - r points on a non-hyperelliptic genus-3 curve in its
//             plane-quartic model; `aligned` = all r points on one line.
//             A line meets the quartic in 4 points, so the flag is only
//             meaningful for r <= 4 and is ignored for r >= 5.

struct HypBundle {
  Int a;
  Int k = 0;
};

struct HypGeneral {
  Int d;
};

struct TrigBundle {
  int c_K = 0;  // 0 or 1
  Int n = 0;
};

struct G3Bundle {
  Int c;
  Int r = 0;
  bool aligned = false;
};

using BundleExpr = std::variant<HypBundle, HypGeneral, TrigBundle, G3Bundle>;

inline Int degree(const CurveClass& curve, const BundleExpr& L) {
  const Int g = curve.genus;
  if (const auto* hb = std::get_if<HypBundle>(&L)) {
    if (curve.kind != CurveKind::Hyperelliptic)
      throw KindError("pencil bundle expression needs a hyperelliptic curve");
    return 2 * hb->a + hb->k;
  }
  if (const auto* hg = std::get_if<HypGeneral>(&L)) {
    if (curve.kind != CurveKind::Hyperelliptic)
      throw KindError("general hyperelliptic bundle needs a hyperelliptic curve");
    return hg->d;
  }
  if (const auto* tb = std::get_if<TrigBundle>(&L)) {
    if (curve.kind != CurveKind::Trigonal)
      throw KindError("trigonal bundle expression needs a trigonal curve");
    return tb->c_K * (2 * g - 2) + 3 * tb->n;
  }
  const auto& gb = std::get<G3Bundle>(L);
  if (curve.kind != CurveKind::Genus3Quartic)
    throw KindError("plane-quartic bundle expression needs the genus-3 kind");
  return 4 * gb.c - gb.r;
}

}  // namespace curvext
