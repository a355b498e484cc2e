#pragma once

// Classification of the surfaces extending a polarized curve in high degree,
// extendability verdicts for hyperelliptic and genus-3 polarizations, and the
// dimension counts for the families of extensions of a fixed bundle type.

#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "curvext/cohomology.hpp"
#include "curvext/gaussian.hpp"
#include "curvext/surface.hpp"
#include "curvext/types.hpp"

namespace curvext {

// d >= 2g + 1 + k guarantees property N_k for the embedded curve.
inline bool green_Nk(const Int& g, const Int& d, const Int& k) {
  if (g < 0 || k < 0) throw DomainError("genus and k must be >= 0");
  return d >= 2 * g + 1 + k;
}

// Above degree 4g + 4 every extension of the curve is a cone. The elliptic
// (g, d) = (1, 9) boundary case carries a caveat: the 2-Veronese of the cone
// over an elliptic normal cubic still extends nontrivially.
inline bool hartshorne_only_cones(const Int& g, const Int& d,
                                  std::vector<std::string>* notes = nullptr) {
  if (g < 1) throw DomainError("the cone bound needs genus >= 1");
  bool only = d > 4 * g + 4;
  if (notes && g == 1 && d == 9)
    notes->push_back(
        "degree-9 elliptic case: the 2-Veronese of the cubic cone is a "
        "nontrivial extension");
  return only;
}

// --- Surface classes -----------------------------------------------------

enum class SurfaceClassKind {
  Planar,
  DelPezzo,
  DelPezzoQuadric,
  HyperellipticRuled,
  TrigonalScroll,
  BiellipticCone,
};

struct SurfaceClass {
  SurfaceClassKind kind;
  std::optional<Int> delta;  // Planar: degree of the plane system
  std::optional<Int> h;      // DelPezzo: number of blown-up points
  std::optional<Int> e;      // ruled/scroll: Hirzebruch index when pinned
  Int b = 0;                 // number of points projected from
  Int degree = 0;            // degree of the (projected) surface
  Int sectional_genus = 0;

  std::string str() const {
    std::string s;
    switch (kind) {
      case SurfaceClassKind::Planar:
        s = "planar delta=" + delta->str();
        break;
      case SurfaceClassKind::DelPezzo:
        s = "del-pezzo h=" + h->str();
        break;
      case SurfaceClassKind::DelPezzoQuadric:
        s = "del-pezzo-quadric";
        break;
      case SurfaceClassKind::HyperellipticRuled:
        s = "hyperelliptic-ruled";
        if (e) s += " e=" + e->str();
        break;
      case SurfaceClassKind::TrigonalScroll:
        s = "trigonal-scroll";
        if (e) s += " e=" + e->str();
        break;
      case SurfaceClassKind::BiellipticCone:
        s = "bielliptic-cone";
        break;
    }
    if (kind != SurfaceClassKind::BiellipticCone) s += " b=" + b.str();
    return s;
  }
};

// Section count of the unprojected trigonal surface class 3H + ((g-3e+2)/2)F;
// evaluates to 2g + 8 for every admissible (g, e), so the surface spans
// P^(2g+7) and its curve section spans a hyperplane.
inline Int trigonal_scroll_sections(const Int& g, const Int& e) {
  return h0_ruled(trigonal_surface_class(g, e));
}

// Surfaces that can extend a non-special polarized curve of genus g and
// degree d >= 4g - 4 (cones excluded). Classes are listed whenever their
// numeric gates admit them; overlapping degrees produce multiple entries.
inline std::vector<SurfaceClass> classify_high_degree(const Int& g,
                                                      const Int& d) {
  if (g < 2) throw DomainError("the classification needs genus >= 2");
  if (d < 4 * g - 4)
    throw DomainError("the classification covers degree >= 4g - 4");
  std::vector<SurfaceClass> out;
  if (d > 4 * g + 4) return out;  // only cones up there

  // Plane linear systems of quartics, quintics or sextics.
  for (int delta = 4; delta <= 6; ++delta) {
    Int gd = Int(delta - 1) * (delta - 2) / 2;
    if (g != gd) continue;
    Int b = Int(delta) * delta - d;
    if (b < 0) continue;
    SurfaceClass c;
    c.kind = SurfaceClassKind::Planar;
    c.delta = Int(delta);
    c.b = b;
    c.degree = d;
    c.sectional_genus = g;
    out.push_back(c);
  }

  // Bicanonical del Pezzo surfaces (d = 4g - 4 exactly).
  if (d == 4 * g - 4 && g >= 3 && g <= 10) {
    SurfaceClass c;
    c.kind = SurfaceClassKind::DelPezzo;
    c.h = 10 - g;
    c.degree = d;
    c.sectional_genus = g;
    out.push_back(c);
    if (g == 9) {
      SurfaceClass q;
      q.kind = SurfaceClassKind::DelPezzoQuadric;
      q.degree = d;
      q.sectional_genus = g;
      out.push_back(q);
    }
  }

  // Projected hyperelliptic ruled surfaces (degree 4g + 4 before projection).
  if (d <= 4 * g + 4) {
    SurfaceClass c;
    c.kind = SurfaceClassKind::HyperellipticRuled;
    c.b = 4 * g + 4 - d;
    c.degree = d;
    c.sectional_genus = g;
    out.push_back(c);
  }

  // Projected trisecant scrolls of trigonal curves (degree 3g + 6 before
  // projection).
  if (d <= 3 * g + 6) {
    SurfaceClass c;
    c.kind = SurfaceClassKind::TrigonalScroll;
    c.b = 3 * g + 6 - d;
    c.degree = d;
    c.sectional_genus = g;
    out.push_back(c);
  }

  // Cones over elliptic curves carrying bielliptic sections (d = 4g - 4).
  if (d == 4 * g - 4 && g >= 4) {
    SurfaceClass c;
    c.kind = SurfaceClassKind::BiellipticCone;
    c.degree = d;
    c.sectional_genus = g;
    out.push_back(c);
  }
  return out;
}

// The two families of plane models of degree 4g + 4 and sectional genus g:
// curves of degree g+3 with one (g+1)-fold and one double point, and curves
// of degree 2g+2-mu with one (2g-mu)-fold point and g-mu double points.
inline std::vector<PlaneSystem> castelnuovo_planar_models(const Int& g) {
  if (g < 2) throw DomainError("plane models need genus >= 2");
  std::vector<PlaneSystem> out;
  out.push_back({g + 3, {g + 1, 2}});
  long long gl = to_ll(g, "genus");
  for (long long mu = 0; mu <= gl; ++mu) {
    PlaneSystem s;
    s.delta = 2 * g + 2 - mu;
    s.mults.push_back(2 * g - mu);
    for (long long i = 0; i < gl - mu; ++i) s.mults.push_back(2);
    out.push_back(std::move(s));
  }
  return out;
}

// Surfaces extending a hyperelliptic curve of genus g polarized in degree d:
// the projections of the ruled surfaces |2H + (g+1-e)F| on F_e, e = 0..g+1.
// Every entry is cross-checked against the planar models above.
inline std::vector<SurfaceClass> classify_hyperelliptic_surfaces(const Int& g,
                                                                 const Int& d) {
  if (g < 2) throw DomainError("hyperelliptic classification needs genus >= 2");
  Int dmin = (g == 2 || g == 3) ? 2 * g + 3 : Int(10);
  if (d < dmin)
    throw DomainError(
        "below degree " + dmin.str() +
        " other possibilities exist; the classification does not apply");
  if (d > 4 * g + 4)
    throw DomainError("above degree 4g + 4 every extension is a cone");

  for (const PlaneSystem& s : castelnuovo_planar_models(g)) {
    PlaneSystemInvariants inv = plane_system_invariants(s);
    if (inv.degree != 4 * g + 4 || inv.sectional_genus != g)
      throw DomainError("plane model validation failed");
  }

  Int b = 4 * g + 4 - d;
  std::vector<SurfaceClass> out;
  long long gl = to_ll(g, "genus");
  for (long long e = 0; e <= gl + 1; ++e) {
    RuledDivisor cls = RuledDivisor::HF(e, 2, g + 1 - e);
    if (h0_ruled(cls) != 3 * g + 6 || intersect(cls, cls) != 4 * g + 4)
      throw DomainError("ruled model validation failed");
    SurfaceClass c;
    c.kind = SurfaceClassKind::HyperellipticRuled;
    c.e = Int(e);
    c.b = b;
    c.degree = d;
    c.sectional_genus = g;
    out.push_back(c);
  }
  return out;
}

// --- Extension verdicts --------------------------------------------------

enum class Extendable { Yes, No, Conditional };
enum class Obstruction { No, Yes, Unknown };

inline const char* to_string(Extendable e) {
  switch (e) {
    case Extendable::Yes: return "yes";
    case Extendable::No: return "no";
    case Extendable::Conditional: return "conditional";
  }
  return "?";
}

inline const char* to_string(Obstruction o) {
  switch (o) {
    case Obstruction::No: return "no";
    case Obstruction::Yes: return "yes";
    case Obstruction::Unknown: return "unknown";
  }
  return "?";
}

struct UniversalRecord {
  std::string tag;
  Int dim;      // 1 + cork
  Int deg;      // degree of the polarization
  Int ambient;  // deg - genus + cork
  Int cork;
};

struct ExtensionVerdict {
  Extendable extendable = Extendable::No;
  std::vector<SurfaceClass> classes;
  std::optional<Int> cork;        // corank of the Gaussian map when computed
  std::optional<Int> family_dim;  // dimension of the family of extensions
  std::optional<UniversalRecord> universal;
  Obstruction obstructed = Obstruction::Unknown;
  std::vector<std::string> notes;
};

// Extendability of (C, L) for a non-hyperelliptic genus-3 curve and an
// explicit bundle of degree >= 9: extendable exactly when 4K - L is
// effective, all extensions come from plane-quartic systems, and the
// deformations are unobstructed.
inline ExtensionVerdict genus3_extendable(const G3Bundle& L) {
  CurveClass curve = CurveClass::genus3_quartic();
  Int d = degree(curve, BundleExpr(L));
  if (d < 9)
    throw DomainError(
        "the genus-3 verdict needs degree >= 9; see the low-degree report");
  CorankResult cr = gaussian_corank(curve, BundleExpr(L));
  ExtensionVerdict v;
  v.cork = cr.cork;
  if (cr.cork >= 1) {
    v.extendable = Extendable::Yes;
    v.family_dim = cr.cork - 1;
    SurfaceClass c;
    c.kind = SurfaceClassKind::Planar;
    c.delta = 4;
    c.b = 16 - d;
    c.degree = d;
    c.sectional_genus = 3;
    v.classes.push_back(c);
    v.obstructed = Obstruction::No;
    if (cr.cork >= 2)
      v.universal = UniversalRecord{"genus3-degree-" + d.str(), cr.cork + 1, d,
                                    d - 3 + cr.cork, cr.cork};
    else
      v.notes.push_back("corank 1: the extension is unique");
  } else {
    v.extendable = Extendable::No;
    v.obstructed = Obstruction::Unknown;
    v.notes.push_back("4K - L has no sections; only cones extend the curve");
  }
  return v;
}

// Same verdict for a general bundle of the given degree.
inline ExtensionVerdict genus3_extendable_general(const Int& d) {
  if (d < 9)
    throw DomainError(
        "the genus-3 verdict needs degree >= 9; see the low-degree report");
  Int cork = h0_fourK_minus_L_by_degree(d, /*aligned=*/false);
  if (d >= 14) cork = 0;  // a general bundle is not of the form 4K - D
  ExtensionVerdict v;
  v.cork = cork;
  if (d <= 13) {
    v.extendable = Extendable::Yes;
    v.family_dim = cork - 1;
    SurfaceClass c;
    c.kind = SurfaceClassKind::Planar;
    c.delta = 4;
    c.b = 16 - d;
    c.degree = d;
    c.sectional_genus = 3;
    v.classes.push_back(c);
    v.obstructed = Obstruction::No;
    if (cork >= 2)
      v.universal = UniversalRecord{"genus3-degree-" + d.str(), cork + 1, d,
                                    d - 3 + cork, cork};
  } else if (d <= 16) {
    v.extendable = Extendable::Conditional;
    v.obstructed = Obstruction::Unknown;
    v.notes.push_back("extendable only for the special bundles 4K minus " +
                      Int(16 - d).str() + " points");
  } else {
    v.extendable = Extendable::No;
    v.obstructed = Obstruction::Unknown;
  }
  return v;
}

// Families of extensions of genus-3 bundles of degree 7 or 8 (below the
// classification range).
struct Genus3LowDegreeReport {
  struct Family {
    Int dim;
    std::string tag;  // "expected" or "superabundant"
  };
  std::vector<Family> families;
  std::vector<std::string> notes;
};

inline Genus3LowDegreeReport genus3_low_degree_report(const Int& d,
                                                      bool L_is_bicanonical) {
  Genus3LowDegreeReport out;
  if (d == 8) {
    out.families.push_back({5, "expected"});
    if (L_is_bicanonical) out.families.push_back({6, "superabundant"});
    return out;
  }
  if (d == 7) {
    out.notes.push_back(
        "degree 7: extendable bundles are of the form 2K - p; no family "
        "dimensions recorded");
    return out;
  }
  throw DomainError("the low-degree report covers degree 7 and 8 only");
}

// Extendability of a hyperelliptic polarized curve, d >= 2g + 3.
inline ExtensionVerdict hyperelliptic_extension_report(const Int& g,
                                                       const Int& d) {
  if (g < 2) throw DomainError("hyperelliptic report needs genus >= 2");
  if (d < 2 * g + 3)
    throw DomainError(
        "degree below 2g + 3: ribbons form a superabundant family of "
        "dimension " +
        Int(4 * g + 4 - d).str());
  ExtensionVerdict v;
  if (d > 4 * g + 4) {
    v.extendable = Extendable::No;
    v.obstructed = Obstruction::Unknown;
    v.notes.push_back("only cones above degree 4g + 4");
    return v;
  }
  v.extendable = Extendable::Yes;
  v.classes = classify_hyperelliptic_surfaces(g, d);
  v.cork = gaussian_corank(CurveClass::hyperelliptic(g),
                           BundleExpr(HypGeneral{d}))
               .cork;
  if (d == 2 * g + 3) {
    v.obstructed = Obstruction::No;
    Int cork = 2 * g + 2;
    v.universal = UniversalRecord{"hyperelliptic-degree-" + d.str(), cork + 1,
                                  d, d - g + cork, cork};
  } else {
    v.obstructed = Obstruction::Yes;
    v.notes.push_back("obstructed for a general polarized curve");
    if (d == 4 * g + 4)
      v.notes.push_back(
          "finitely many extensions but more than one; no universal "
          "extension");
  }
  return v;
}

// --- Families of extensions with fixed splitting type -------------------

// Largest b for which ribbons over the curve integrate: b_max = 2g + 1.
inline Int ribbon_b_max(const Int& g) { return 2 * g + 1; }

namespace detail {
inline Int min_int(const Int& x, const Int& y) { return x < y ? x : y; }
}  // namespace detail

// delta_{mu,b} = b + min(g, mu) - min(g, mu + b): the drop between the
// dimension of the family of extensions and its expected value.
inline Int delta_family_dim(const Int& g, const Int& mu, const Int& b) {
  if (g < 2) throw DomainError("family dimensions need genus >= 2");
  if (mu < 0 || mu > g + 1)
    throw DomainError("splitting invariant mu must satisfy 0 <= mu <= g + 1");
  if (b < 0) throw DomainError("b must be >= 0");
  return b + detail::min_int(g, mu) - detail::min_int(g, mu + b);
}

// Dimension of the locus in the Jacobian swept by the relevant bundles.
inline Int jacobian_locus_dim(const Int& g, const Int& mu, const Int& b) {
  if (mu < 0 || mu > g + 1)
    throw DomainError("splitting invariant mu must satisfy 0 <= mu <= g + 1");
  if (b < 0) throw DomainError("b must be >= 0");
  return detail::min_int(g, mu + b);
}

// Dimension of the family in moduli: 2g + b - 1 + min(g, mu).
inline Int moduli_dim(const Int& g, const Int& mu, const Int& b) {
  if (g < 2) throw DomainError("family dimensions need genus >= 2");
  if (mu < 0 || mu > g + 1)
    throw DomainError("splitting invariant mu must satisfy 0 <= mu <= g + 1");
  if (b < 0) throw DomainError("b must be >= 0");
  Int md = 2 * g + b - 1 + detail::min_int(g, mu);
  assert(delta_family_dim(g, mu, b) ==
         md - (2 * g - 1 + jacobian_locus_dim(g, mu, b)));
  return md;
}

// A curve on a ruled surface over an elliptic curve embeds exactly when no
// two of the chosen points are conjugate under the hyperelliptic involution.
struct PointConfig {
  Int count = 0;
  std::vector<std::pair<Int, Int>> conjugate_pairs;
};

inline bool embeddable_in_ruled(const Int& g, const PointConfig& pts) {
  if (pts.count < 0) throw DomainError("point count must be >= 0");
  if (pts.count > g + 1)
    throw DomainError("at most g + 1 points can be used");
  for (const auto& [i, j] : pts.conjugate_pairs)
    if (i < 0 || j < 0 || i >= pts.count || j >= pts.count)
      throw DomainError("conjugate pair indices must index the points");
  return pts.conjugate_pairs.empty();
}

// The two ways of producing splitting invariants mu on a genus-g curve,
// g = 2*gamma + eps.
enum class Parity { Even, Odd };

struct SplitPlan {
  Int mu;
  Int e;  // g + 1 - mu
};

inline SplitPlan even_odd_plan(const Int& g, Parity parity, const Int& k) {
  if (g < 2) throw DomainError("split plans need genus >= 2");
  if (k < 0) throw RangeError("k must be >= 0");
  Int gamma = g / 2;
  Int eps = g - 2 * gamma;
  Int mu;
  if (parity == Parity::Even) {
    if (k > gamma + eps)
      throw RangeError("even plans need 0 <= k <= gamma + eps");
    mu = g + eps - 2 * k;
  } else {
    if (k > gamma) throw RangeError("odd plans need 0 <= k <= gamma");
    mu = g + 1 - eps - 2 * k;
  }
  // The section class has degree 2g + 2 - mu, so the normal bundle degree
  // 2*(2g + 2 - mu) + 2*mu is 4g + 4 independently of the plan.
  assert(2 * (2 * g + 2 - mu) + 2 * mu == 4 * g + 4);
  return {mu, g + 1 - mu};
}

}  // namespace curvext
