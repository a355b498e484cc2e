#pragma once

// The consolidated acceptance suite: one structured result per criterion,
// shared by the acceptance test binary and the report-all command.

#include <random>
#include <string>
#include <vector>

#include "curvext/classify.hpp"
#include "curvext/cohomology.hpp"
#include "curvext/gaussian.hpp"
#include "curvext/poly.hpp"
#include "curvext/surface.hpp"
#include "curvext/tables.hpp"
#include "curvext/types.hpp"
#include "curvext/universal.hpp"
#include "curvext/weighted.hpp"

namespace curvext {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  long long checks = 0;  // individual comparisons performed
  std::string detail;    // first failure, or empty
};

namespace acceptance_detail {

struct Ctx {
  long long checks = 0;
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

inline CriterionResult finish(int index, const std::string& name, Ctx& c) {
  CriterionResult r;
  r.index = index;
  r.name = name;
  r.passed = c.ok;
  r.checks = c.checks;
  r.detail = c.detail;
  return r;
}

inline CriterionResult failure(int index, const std::string& name,
                               const std::string& why) {
  CriterionResult r;
  r.index = index;
  r.name = name;
  r.passed = false;
  r.detail = why;
  return r;
}

// --- 1: trigonal scroll table --------------------------------------------

struct TrigonalExpect {
  long long g, a, b, h0_sub, h0_K_minus;
  const char* cls;
};

inline CriterionResult criterion_trigonal_table() {
  static const TrigonalExpect expected[] = {
      {5, 3, 4, 2, 3, "3E+5F on F_1"},   {6, 4, 4, 3, 2, "3E+4F on F_0"},
      {6, 3, 5, 3, 2, "3E+7F on F_2"},   {7, 4, 5, 4, 1, "3E+6F on F_1"},
      {7, 3, 6, 5, 2, "3E+9F on F_3"},   {8, 5, 5, 5, 0, "3E+5F on F_0"},
      {8, 4, 6, 6, 1, "3E+8F on F_2"},   {9, 5, 6, 7, 0, "3E+7F on F_1"},
      {9, 4, 7, 8, 1, "3E+10F on F_3"},  {10, 6, 6, 9, 0, "3E+6F on F_0"},
      {10, 5, 7, 9, 0, "3E+9F on F_2"},  {10, 4, 8, 10, 1, "3E+12F on F_4"},
  };
  Ctx c;
  std::vector<TrigonalRow> rows = trigonal_table();
  c.expect(rows.size() == std::size(expected), "row count differs");
  for (std::size_t i = 0; i < rows.size() && i < std::size(expected); ++i) {
    const TrigonalRow& r = rows[i];
    const TrigonalExpect& e = expected[i];
    std::string where = "row g=" + r.g.str() + " (" + r.a.str() + "," +
                        r.b.str() + ")";
    c.expect(r.g == e.g && r.a == e.a && r.b == e.b, where + ": Maroni pair");
    c.expect(r.h0_sub == e.h0_sub, where + ": h0((g-4)*pencil)");
    c.expect(r.h0_K_minus == e.h0_K_minus, where + ": h0(K-(g-4)*pencil)");
    c.expect(r.cls_str == e.cls, where + ": class string");
  }
  return finish(1, "trigonal-table", c);
}

// --- 2: hyperelliptic Gaussian corank ------------------------------------

inline CriterionResult criterion_hyperelliptic_corank() {
  Ctx c;
  for (long long g = 2; g <= 15; ++g) {
    CurveClass curve = CurveClass::hyperelliptic(Int(g));
    for (long long d = 2 * g + 3; d <= 4 * g + 8; ++d) {
      std::string where = "g=" + std::to_string(g) + " d=" + std::to_string(d);
      CorankResult r = gaussian_corank(curve, BundleExpr(HypGeneral{Int(d)}));
      c.expect(r.cork == 2 * Int(g) + 2, where + ": general-bundle corank");
      c.expect(r.mult_cork && *r.mult_cork == 0, where + ": mult certified");
      auto rib = ribbon_space_dim(curve, BundleExpr(HypGeneral{Int(d)}));
      c.expect(rib && *rib == 2 * Int(g) + 1, where + ": ribbon dimension");
      c.expect(ribbon_b_max(Int(g)) == 2 * Int(g) + 1, where + ": b_max");
      for (long long a = 0; 2 * a <= d; ++a) {
        HypBundle L{Int(a), Int(d - 2 * a)};
        CorankResult rs = gaussian_corank(curve, BundleExpr(L));
        c.expect(rs.cork == 2 * Int(g) + 2,
                 where + " split a=" + std::to_string(a) + ": corank");
      }
    }
  }
  return finish(2, "hyperelliptic-corank", c);
}

// --- 3: plane-quartic twist values ---------------------------------------

inline CriterionResult criterion_quartic_twists() {
  struct Row {
    long long d, general, aligned;
  };
  static const Row expected[] = {
      {9, 5, 5},  {10, 4, 4}, {11, 3, 3}, {12, 2, 3},
      {13, 1, 2}, {14, 1, 1}, {15, 1, 1}, {16, 1, 1},
  };
  Ctx c;
  std::vector<QuarticTwistRow> rows = genus3_lemma_table();
  c.expect(rows.size() == std::size(expected), "row count differs");
  for (std::size_t i = 0; i < rows.size() && i < std::size(expected); ++i) {
    std::string where = "d=" + rows[i].d.str();
    c.expect(rows[i].d == expected[i].d, where + ": degree column");
    c.expect(rows[i].general == expected[i].general, where + ": general value");
    c.expect(rows[i].aligned == expected[i].aligned, where + ": aligned value");
  }
  for (long long d = 17; d <= 20; ++d) {
    c.expect(h0_fourK_minus_L_by_degree(Int(d), false) == 0,
             "d>16 must vanish (general)");
    c.expect(h0_fourK_minus_L_by_degree(Int(d), true) == 0,
             "d>16 must vanish (aligned)");
  }
  return finish(3, "quartic-twist-values", c);
}

// --- 4: pluricanonical coranks -------------------------------------------

inline CriterionResult criterion_pluricanonical() {
  Ctx c;
  CurveClass g3 = CurveClass::genus3_quartic();
  c.expect(pluricanonical_corank(g3, 2) == 6, "genus 3, m=2");
  c.expect(pluricanonical_corank(g3, 3) == 3, "genus 3, m=3");
  c.expect(pluricanonical_corank(g3, 4) == 1, "genus 3, m=4");
  CurveClass g4 = CurveClass::general_clifford(4, 1);
  c.expect(pluricanonical_corank(g4, 2) == 5, "genus 4, m=2");
  c.expect(pluricanonical_corank(g4, 3) == 1, "genus 4, m=3");
  c.expect(pluricanonical_corank(CurveClass::general_clifford(5, 2), 2) == 3,
           "genus 5 non-trigonal, m=2");
  c.expect(pluricanonical_corank(CurveClass::plane_quintic(), 2) == 3,
           "plane quintic");
  for (long long g = 3; g <= 10; ++g)
    if (g >= 5)
      c.expect(pluricanonical_corank(
                   CurveClass::del_pezzo_bianticanonical(Int(g)), 2) == 1,
               "del Pezzo bi-anticanonical g=" + std::to_string(g));
  c.expect(pluricanonical_corank(CurveClass::plane_sextic(), 2) == 1,
           "plane sextic");
  for (long long g = 6; g <= 12; ++g)
    c.expect(pluricanonical_corank(CurveClass::bielliptic(Int(g)), 2) == 1,
             "bielliptic g=" + std::to_string(g));
  for (long long cl = 3; cl <= 5; ++cl)
    c.expect(pluricanonical_corank(
                 CurveClass::general_clifford(Int(2 * cl + 1), Int(cl)), 2) ==
                 0,
             "Clifford >= 3");
  for (const TrigonalRow& row : trigonal_table())
    c.expect(pluricanonical_corank(
                 CurveClass::trigonal(row.g, row.a, row.b), 2) ==
                 row.h0_K_minus,
             "trigonal g=" + row.g.str() + " (" + row.a.str() + "," +
                 row.b.str() + ")");
  return finish(4, "pluricanonical-coranks", c);
}

// --- 5: family-dimension grid ---------------------------------------------

inline CriterionResult criterion_delta_grid() {
  Ctx c;
  for (long long g = 2; g <= 12; ++g)
    for (long long mu = 0; mu <= g + 1; ++mu)
      for (long long b = 0; b <= 2 * g + 1; ++b) {
        std::string where = "g=" + std::to_string(g) +
                            " mu=" + std::to_string(mu) +
                            " b=" + std::to_string(b);
        Int delta = delta_family_dim(Int(g), Int(mu), Int(b));
        c.expect(delta <= b, where + ": delta <= b");
        Int md = moduli_dim(Int(g), Int(mu), Int(b));
        Int jac = jacobian_locus_dim(Int(g), Int(mu), Int(b));
        c.expect(delta == md - (2 * Int(g) - 1 + jac),
                 where + ": moduli bookkeeping");
        bool is_max = delta == 2 * Int(g) + 1;
        bool should = b == 2 * g + 1 && (mu == g || mu == g + 1);
        c.expect(is_max == should, where + ": maximum locus");
      }
  return finish(5, "delta-grid", c);
}

// --- 6: weighted models vs corank bookkeeping ------------------------------

inline CriterionResult criterion_weighted_models() {
  Ctx c;
  {
    WhInvariants wh = wh_invariants({{1, 1, 1, 3, 3, 3}, 4, 3});
    c.expect(wh.dim == 4 && wh.ambient == 12 && wh.degree == 12,
             "tricanonical genus-3 model invariants");
    UniversalQuery q{UniversalFamily::Genus3Polarized};
    q.three_canonical = true;
    UniversalRecord rec = universal_catalogue(q);
    c.expect(wh.dim == rec.dim && wh.ambient == rec.ambient &&
                 wh.degree == rec.deg,
             "tricanonical genus-3 model vs catalogue");
  }
  {
    WhInvariants wh = wh_invariants({{1, 1, 1, 1, 2, 2, 2, 2}, 3, 2});
    c.expect(wh.dim == 6 && wh.ambient == 13 && wh.degree == 12,
             "bicanonical genus-4 model invariants");
    UniversalQuery q{UniversalFamily::Pluricanonical};
    q.curve = CurveClass::general_clifford(4, 1);
    q.m = 2;
    UniversalRecord rec = universal_catalogue(q);
    c.expect(wh.dim == rec.dim && wh.ambient == rec.ambient &&
                 wh.degree == rec.deg,
             "bicanonical genus-4 model vs catalogue");
  }
  {
    WhInvariants wh = wh_invariants({{1, 1, 1, 4, 4, 4}, 5, 4});
    c.expect(wh.dim == 4 && wh.ambient == 17 && wh.degree == 20,
             "bicanonical plane-quintic model invariants");
    UniversalQuery q{UniversalFamily::Pluricanonical};
    q.curve = CurveClass::plane_quintic();
    q.m = 2;
    UniversalRecord rec = universal_catalogue(q);
    c.expect(wh.dim == rec.dim && wh.ambient == rec.ambient &&
                 wh.degree == rec.deg,
             "bicanonical plane-quintic model vs catalogue");
  }
  return finish(6, "weighted-double-derivation", c);
}

// --- 7: genus-3 catalogue ---------------------------------------------------

inline CriterionResult criterion_genus3_catalogue() {
  struct Expect {
    const char* tag;
    long long dim, deg, ambient;
  };
  static const Expect expected[] = {
      {"genus3-degree-9", 6, 9, 11},
      {"genus3-degree-10", 5, 10, 11},
      {"genus3-degree-11", 4, 11, 11},
      {"genus3-degree-12-general", 3, 12, 11},
      {"genus3-tricanonical", 4, 12, 12},
      {"genus3-degree-13-aligned", 3, 13, 12},
  };
  Ctx c;
  std::vector<UniversalRecord> recs = genus3_catalogue_all();
  c.expect(recs.size() == std::size(expected), "catalogue size");
  for (std::size_t i = 0; i < recs.size() && i < std::size(expected); ++i) {
    const UniversalRecord& r = recs[i];
    const Expect& e = expected[i];
    c.expect(r.tag == e.tag, "tag " + r.tag);
    c.expect(r.dim == e.dim && r.deg == e.deg && r.ambient == e.ambient,
             std::string("record ") + e.tag);
    c.expect(r.dim == 1 + r.cork && r.ambient == r.deg - 3 + r.cork,
             std::string("record coherence ") + e.tag);
    if (r.deg >= 9 && r.deg <= 11)
      c.expect(r.dim == 15 - r.deg && r.ambient == 11,
               std::string("low-degree shape ") + e.tag);
  }
  return finish(7, "genus3-catalogue", c);
}

// --- 8: surface-geometry identities ----------------------------------------

inline CriterionResult criterion_surface_identities() {
  Ctx c;
  for (long long e = 0; e <= 6; ++e) {
    long long kmin = e >= 3 ? 0 : 3 - e;
    for (long long k = kmin; k <= 10; ++k) {
      Int g = Int(k + e - 1);
      RuledDivisor D = RuledDivisor::HF(Int(e), 2, Int(k));
      std::string where = "e=" + std::to_string(e) + " k=" + std::to_string(k);
      c.expect(h0_ruled(D) == 3 * g + 6, where + ": section count");
      c.expect(intersect(D, D) == 4 * g + 4, where + ": self-intersection");
      c.expect(adjunction_genus(D) == g, where + ": sectional genus");
    }
  }
  for (long long g = 2; g <= 20; ++g) {
    std::vector<PlaneSystem> models = castelnuovo_planar_models(Int(g));
    c.expect(models.size() == static_cast<std::size_t>(g) + 2,
             "model count at g=" + std::to_string(g));
    for (const PlaneSystem& s : models) {
      PlaneSystemInvariants inv = plane_system_invariants(s);
      std::string where =
          "g=" + std::to_string(g) + " delta=" + s.delta.str();
      c.expect(inv.degree == 4 * Int(g) + 4, where + ": degree");
      c.expect(inv.sectional_genus == g, where + ": genus");
    }
  }
  return finish(8, "surface-identities", c);
}

// --- 9: polynomial construction checks --------------------------------------

inline SparsePoly random_homog(std::size_t arity, std::uint32_t degree,
                               std::mt19937_64& rng) {
  SparsePoly p(arity);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<std::uint32_t> e(arity, 0);
  // Enumerate all exponent vectors of the given total degree.
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == arity) {
      e[i] = left;
      p.add_term(e, Rat(num(rng), den(rng)));
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, degree);
  return p;
}

inline CriterionResult criterion_constructions() {
  Ctx c;
  SparsePoly f1 = parse_poly("x0^3", 3);
  SparsePoly f2 = parse_poly("x1^3 + x2^2*x0", 3);
  SparsePoly klein = parse_poly("x0^3*x1 + x1^3*x2 + x2^3*x0", 3);
  c.expect(check_construction_genus3(f1, f2, Rat(0), Rat(0), klein),
           "Klein quartic split");

  std::mt19937_64 rng(20260817);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  for (int trial = 0; trial < 5; ++trial) {
    SparsePoly r1 = random_homog(3, 3, rng), r2 = random_homog(3, 3, rng);
    Rat a1(num(rng), den(rng)), a2(num(rng), den(rng));
    c.expect(check_construction_genus3(r1, r2, a1, a2),
             "random genus-3 instance " + std::to_string(trial));
  }
  {
    SparsePoly corrupted = klein;
    corrupted.add_term({4, 0, 0}, Rat(1));  // perturb one quartic coefficient
    c.expect(!check_construction_genus3(f1, f2, Rat(0), Rat(0), corrupted),
             "corrupted genus-3 control");
  }

  SparsePoly f = parse_poly("x0*x3 - x1*x2", 4);
  std::vector<SparsePoly> gs, gs2;
  for (int i = 0; i < 4; ++i) gs.push_back(random_homog(4, 2, rng));
  std::vector<Rat> zero = {Rat(0), Rat(0), Rat(0), Rat(0)};
  std::vector<Rat> e0 = {Rat(1), Rat(0), Rat(0), Rat(0)};
  c.expect(check_construction_genus4(f, gs, zero), "genus-4 with a = 0");
  c.expect(check_construction_genus4(f, gs, e0), "genus-4 with a = e0");
  for (int trial = 0; trial < 5; ++trial) {
    gs2.clear();
    for (int i = 0; i < 4; ++i) gs2.push_back(random_homog(4, 2, rng));
    std::vector<Rat> as;
    for (int i = 0; i < 4; ++i) as.push_back(Rat(num(rng), den(rng)));
    c.expect(check_construction_genus4(random_homog(4, 2, rng), gs2, as),
             "random genus-4 instance " + std::to_string(trial));
  }
  {
    SparsePoly expected(4);
    for (std::size_t i = 0; i < 4; ++i)
      expected = expected + SparsePoly::variable(4, i) * gs[i];
    c.expect(check_construction_genus4(f, gs, zero, expected),
             "genus-4 expected cubic");
    SparsePoly corrupted = expected;
    corrupted.add_term({0, 3, 0, 0}, Rat(1, 2));
    c.expect(!check_construction_genus4(f, gs, zero, corrupted),
             "corrupted genus-4 control");
  }
  return finish(9, "construction-checks", c);
}

// --- 10: predicate boundaries ----------------------------------------------

inline CriterionResult criterion_boundaries() {
  Ctx c;
  for (long long g = 2; g <= 12; ++g) {
    std::string where = "g=" + std::to_string(g);
    c.expect(green_Nk(Int(g), 2 * Int(g) + 3, 2), where + ": N2 at 2g+3");
    c.expect(!green_Nk(Int(g), 2 * Int(g) + 2, 2), where + ": N2 at 2g+2");
    c.expect(!hartshorne_only_cones(Int(g), 4 * Int(g) + 4),
             where + ": cone bound at 4g+4");
    c.expect(hartshorne_only_cones(Int(g), 4 * Int(g) + 5),
             where + ": cone bound at 4g+5");
    c.expect(classify_high_degree(Int(g), 4 * Int(g) + 5).empty(),
             where + ": no classes above the bound");
    c.expect(!classify_high_degree(Int(g), 4 * Int(g) + 4).empty(),
             where + ": classes at the bound");
  }
  return finish(10, "predicate-boundaries", c);
}

// --- 11: Riemann-Roch sweep --------------------------------------------------

inline CriterionResult criterion_riemann_roch() {
  Ctx c;
  for (long long g = 2; g <= 15; ++g)
    for (long long a = 0; a <= 2 * g; ++a)
      for (long long k = 0; k <= 10; ++k) {
        Int h0 = h0_hyperelliptic(Int(g), Int(a), Int(k));
        Int h1 = h1_hyperelliptic(Int(g), Int(a), Int(k));
        Int d = 2 * Int(a) + k;
        c.expect(h0 - h1 == d - g + 1,
                 "g=" + std::to_string(g) + " a=" + std::to_string(a) +
                     " k=" + std::to_string(k));
      }
  return finish(11, "riemann-roch-sweep", c);
}

}  // namespace acceptance_detail

inline std::vector<CriterionResult> run_acceptance() {
  using namespace acceptance_detail;
  struct Entry {
    int index;
    const char* name;
    CriterionResult (*fn)();
  };
  static const Entry entries[] = {
      {1, "trigonal-table", &criterion_trigonal_table},
      {2, "hyperelliptic-corank", &criterion_hyperelliptic_corank},
      {3, "quartic-twist-values", &criterion_quartic_twists},
      {4, "pluricanonical-coranks", &criterion_pluricanonical},
      {5, "delta-grid", &criterion_delta_grid},
      {6, "weighted-double-derivation", &criterion_weighted_models},
      {7, "genus3-catalogue", &criterion_genus3_catalogue},
      {8, "surface-identities", &criterion_surface_identities},
      {9, "construction-checks", &criterion_constructions},
      {10, "predicate-boundaries", &criterion_boundaries},
      {11, "riemann-roch-sweep", &criterion_riemann_roch},
  };
  std::vector<CriterionResult> out;
  for (const Entry& e : entries) {
    try {
      out.push_back(e.fn());
    } catch (const std::exception& ex) {
      out.push_back(failure(e.index, e.name, std::string("threw: ") + ex.what()));
    }
  }
  return out;
}

}  // namespace curvext
