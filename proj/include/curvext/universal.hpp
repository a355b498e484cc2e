#pragma once

// The catalogue of universal extensions (dimension, degree, ambient space),
// with coranks recomputed through the Gaussian-map module, and the exact
// polynomial checks for the explicit low-genus constructions.

#include <optional>
#include <string>
#include <vector>

#include "curvext/classify.hpp"
#include "curvext/gaussian.hpp"
#include "curvext/poly.hpp"
#include "curvext/types.hpp"
#include "curvext/weighted.hpp"

namespace curvext {

// --- Universal-extension catalogue ---------------------------------------

enum class UniversalFamily {
  Genus3Polarized,   // plane quartic, explicit bundle of degree 9..13
  Hyperelliptic,     // degree 2g+3 polarization
  Pluricanonical,    // m-canonical curve of a given class
};

struct UniversalQuery {
  UniversalFamily family;
  // Genus3Polarized
  Int d = 0;
  bool aligned = false;          // the 16-d removed points lie on a line
  bool three_canonical = false;  // L = 3K (forces d = 12)
  // Hyperelliptic
  Int g = 0;
  // Pluricanonical
  std::optional<CurveClass> curve;
  Int m = 0;
};

namespace detail {

inline UniversalRecord make_record(const std::string& tag, const Int& cork,
                                   const Int& deg, const Int& genus) {
  if (cork <= 1)
    throw NoUniversalError("corank at most 1: no universal extension (tag " +
                           tag + ")");
  UniversalRecord r;
  r.tag = tag;
  r.cork = cork;
  r.dim = cork + 1;
  r.deg = deg;
  r.ambient = deg - genus + cork;
  return r;
}

}  // namespace detail

inline UniversalRecord universal_catalogue(const UniversalQuery& q) {
  switch (q.family) {
    case UniversalFamily::Genus3Polarized: {
      CurveClass curve = CurveClass::genus3_quartic();
      if (q.three_canonical) {
        if (q.d != 0 && q.d != 12)
          throw DomainError("the three-canonical bundle has degree 12");
        CorankResult cr = gaussian_corank(curve, BundleExpr(G3Bundle{3, 0}));
        return detail::make_record("genus3-tricanonical", cr.cork, 12, 3);
      }
      if (q.d < 9 || q.d > 13)
        throw DomainError(
            "the genus-3 polarized catalogue covers degree 9 to 13");
      G3Bundle L{4, Int(16 - q.d), q.aligned};
      CorankResult cr = gaussian_corank(curve, BundleExpr(L));
      std::string tag = "genus3-degree-" + q.d.str();
      if (q.d >= 12) tag += q.aligned ? "-aligned" : "-general";
      return detail::make_record(tag, cr.cork, q.d, 3);
    }
    case UniversalFamily::Hyperelliptic: {
      if (q.g < 2) throw DomainError("hyperelliptic cases need genus >= 2");
      if (q.d == 4 * q.g + 4)
        throw NoUniversalError(
            "degree 4g+4: finitely many extensions but more than one; no "
            "universal extension");
      if (q.d > 2 * q.g + 3 && q.d < 4 * q.g + 4)
        throw NoUniversalError(
            "general extensions in degree 2g+3 < d < 4g+4 are obstructed; "
            "no universal extension");
      if (q.d != 2 * q.g + 3)
        throw DomainError("hyperelliptic catalogue covers 2g+3 <= d <= 4g+4");
      CurveClass curve = CurveClass::hyperelliptic(q.g);
      CorankResult cr = gaussian_corank(curve, BundleExpr(HypGeneral{q.d}));
      return detail::make_record("hyperelliptic-g" + q.g.str() + "-degree-" +
                                     q.d.str(),
                                 cr.cork, q.d, q.g);
    }
    case UniversalFamily::Pluricanonical: {
      if (!q.curve) throw DomainError("pluricanonical cases need a curve class");
      const CurveClass& c = *q.curve;
      if (c.kind == CurveKind::Genus3Quartic && q.m == 2)
        throw NoUniversalError(
            "property N2 fails for the bicanonical genus-3 model; no "
            "universal extension");
      std::vector<std::string> warnings;
      Int cork = pluricanonical_corank(c, q.m, &warnings);
      std::string tag = q.m.str() + "-canonical-" + to_string(c.kind) + "-g" +
                        c.genus.str();
      if (c.kind == CurveKind::Trigonal)
        tag += "-(" + c.maroni_a.str() + "," + c.maroni_b.str() + ")";
      return detail::make_record(tag, cork, Int(q.m * (2 * c.genus - 2)),
                                 c.genus);
    }
  }
  throw DomainError("unknown universal family");
}

// The six genus-3 catalogue entries, low to high degree: general bundles of
// degree 9..12, the three-canonical bundle, and the aligned degree-13 case
// (a general degree-13 bundle has corank 1 and no universal extension).
inline std::vector<UniversalRecord> genus3_catalogue_all() {
  std::vector<UniversalRecord> out;
  for (long long d = 9; d <= 12; ++d) {
    UniversalQuery q{UniversalFamily::Genus3Polarized};
    q.d = d;
    out.push_back(universal_catalogue(q));
  }
  UniversalQuery t{UniversalFamily::Genus3Polarized};
  t.three_canonical = true;
  out.push_back(universal_catalogue(t));
  UniversalQuery q{UniversalFamily::Genus3Polarized};
  q.d = 13;
  q.aligned = true;
  out.push_back(universal_catalogue(q));
  return out;
}

// --- Explicit construction checks ----------------------------------------

namespace detail {

inline SparsePoly lift_vars(const SparsePoly& p, std::size_t target) {
  std::vector<SparsePoly> images;
  images.reserve(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i)
    images.push_back(SparsePoly::variable(target, i));
  return p.substitute(images);
}

}  // namespace detail

// The quartic surface construction: substituting y1 = f1 + a1*y0 and
// y2 = f2 + a2*y0 into x0*y0 + x1*y1 + x2*y2 must give
// (x1*f1 + x2*f2) + y0*(x0 + a1*x1 + a2*x2) identically, and the
// specialization y0 = 0 must recover f = x1*f1 + x2*f2. If an expected
// quartic is supplied it is compared against x1*f1 + x2*f2.
inline bool check_construction_genus3(
    const SparsePoly& f1, const SparsePoly& f2, const Rat& a1, const Rat& a2,
    const std::optional<SparsePoly>& expected_f = std::nullopt) {
  if (f1.arity() != 3 || f2.arity() != 3)
    throw ArityError("genus-3 construction polynomials live in x0, x1, x2");
  if (!f1.is_homogeneous_of_degree(3) || !f2.is_homogeneous_of_degree(3))
    throw HomogeneityError("f1 and f2 must be homogeneous cubics");

  const std::size_t n = 6;  // x0, x1, x2, y0, y1, y2
  auto X = [&](std::size_t i) { return SparsePoly::variable(n, i); };
  auto Y = [&](std::size_t i) { return SparsePoly::variable(n, 3 + i); };
  SparsePoly F1 = detail::lift_vars(f1, n), F2 = detail::lift_vars(f2, n);

  SparsePoly pairing = X(0) * Y(0) + X(1) * Y(1) + X(2) * Y(2);
  std::vector<SparsePoly> sub = {X(0), X(1), X(2),
                                 Y(0), F1 + a1 * Y(0), F2 + a2 * Y(0)};
  SparsePoly lhs = pairing.substitute(sub);
  SparsePoly rhs =
      X(1) * F1 + X(2) * F2 + Y(0) * (X(0) + a1 * X(1) + a2 * X(2));
  bool ok = lhs == rhs;

  std::vector<SparsePoly> at_zero = {X(0), X(1), X(2), SparsePoly(n), F1, F2};
  ok = ok && pairing.substitute(at_zero) == X(1) * F1 + X(2) * F2;

  if (expected_f) {
    if (expected_f->arity() != 3)
      throw ArityError("the expected quartic lives in x0, x1, x2");
    if (!expected_f->is_homogeneous_of_degree(4))
      throw HomogeneityError("the expected polynomial must be a quartic");
    SparsePoly x1 = SparsePoly::variable(3, 1), x2 = SparsePoly::variable(3, 2);
    ok = ok && (x1 * f1 + x2 * f2 == *expected_f);
  }
  return ok;
}

// The complete-intersection construction in genus 4: substituting
// y_i = g_i + a_i*f into x0*y0 + ... + x3*y3 must give
// (x0*g0 + ... + x3*g3) + (a0*x0 + ... + a3*x3)*f identically. If an
// expected cubic is supplied it is compared against sum x_i*g_i.
inline bool check_construction_genus4(
    const SparsePoly& f, const std::vector<SparsePoly>& gs,
    const std::vector<Rat>& as,
    const std::optional<SparsePoly>& expected_g = std::nullopt) {
  if (gs.size() != 4 || as.size() != 4)
    throw ArityError("the genus-4 construction needs g0..g3 and a0..a3");
  if (f.arity() != 4)
    throw ArityError("genus-4 construction polynomials live in x0..x3");
  if (!f.is_homogeneous_of_degree(2))
    throw HomogeneityError("f must be a homogeneous quadric");
  for (const SparsePoly& g : gs) {
    if (g.arity() != 4)
      throw ArityError("genus-4 construction polynomials live in x0..x3");
    if (!g.is_homogeneous_of_degree(2))
      throw HomogeneityError("g0..g3 must be homogeneous quadrics");
  }

  const std::size_t n = 8;  // x0..x3, y0..y3
  auto X = [&](std::size_t i) { return SparsePoly::variable(n, i); };
  auto Y = [&](std::size_t i) { return SparsePoly::variable(n, 4 + i); };
  SparsePoly F = detail::lift_vars(f, n);
  std::vector<SparsePoly> G;
  for (const SparsePoly& g : gs) G.push_back(detail::lift_vars(g, n));

  SparsePoly pairing(n), rhs(n), alin(n);
  std::vector<SparsePoly> sub;
  for (std::size_t i = 0; i < 4; ++i) sub.push_back(X(i));
  for (std::size_t i = 0; i < 4; ++i) {
    pairing = pairing + X(i) * Y(i);
    rhs = rhs + X(i) * G[i];
    alin = alin + as[i] * X(i);
    sub.push_back(G[i] + as[i] * F);
  }
  rhs = rhs + alin * F;
  bool ok = pairing.substitute(sub) == rhs;

  if (expected_g) {
    if (expected_g->arity() != 4)
      throw ArityError("the expected cubic lives in x0..x3");
    if (!expected_g->is_homogeneous_of_degree(3))
      throw HomogeneityError("the expected polynomial must be a cubic");
    SparsePoly sum(4);
    for (std::size_t i = 0; i < 4; ++i)
      sum = sum + SparsePoly::variable(4, i) * gs[i];
    ok = ok && (sum == *expected_g);
  }
  return ok;
}

// --- Stored reference data ------------------------------------------------

struct BettiSummand {
  Int twist;
  Int rank;
};

struct BettiTable {
  // steps[0] = generators of the ideal, steps[k] = k-th syzygies;
  // summands per step exactly as printed.
  std::vector<std::vector<BettiSummand>> steps;
  bool has_N2 = false;
};

// Minimal resolution of the bicanonical genus-3 ideal in P^5 (stored
// reference data, not recomputed). Property N2 fails: the first syzygies
// are not all linear.
inline BettiTable reference_betti_genus3_bicanonical() {
  BettiTable t;
  t.steps = {
      {{-2, 7}},
      {{-4, 6}, {-3, 8}},
      {{-5, 8}, {-4, 3}},
      {{-6, 3}},
  };
  t.has_N2 = false;
  return t;
}

}  // namespace curvext
