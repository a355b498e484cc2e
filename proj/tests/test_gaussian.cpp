#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <vector>

#include "curvext/cohomology.hpp"
#include "curvext/curve.hpp"
#include "curvext/gaussian.hpp"

using namespace curvext;

namespace {

Int h0_twist(const CurveClass& c, const BundleExpr& L, const Int& t) {
  return h0_canonical_twist(c, L, t);
}

// The bookkeeping identity tying all five quantities together:
//   cork = h0(2K + L) - g*h0(L) + h0(K + L) - cork(mult) + dim ker.
// It holds whenever the multiplication corank is determined.
void check_bookkeeping(const CurveClass& c, const BundleExpr& L) {
  CorankResult r = gaussian_corank(c, L);
  if (!r.mult_cork) return;
  Int lhs = r.cork;
  Int rhs = h0_twist(c, L, 2) - c.genus * h0_bundle(c, L) + h0_twist(c, L, 1) -
            *r.mult_cork + r.ker_dim;
  CHECK(lhs == rhs);
}

}  // namespace

TEST_CASE("multiplication coranks certified zero") {
  CurveClass hyp4 = CurveClass::hyperelliptic(4);
  CHECK(mult_map_corank(hyp4, BundleExpr(HypGeneral{11})) == Int(0));

  CurveClass g3 = CurveClass::genus3_quartic();
  CHECK(mult_map_corank(g3, BundleExpr(G3Bundle{2, 2})) == Int(0));  // d = 6

  // low-degree special bundles stay undetermined
  CurveClass hyp6 = CurveClass::hyperelliptic(6);
  CHECK_FALSE(mult_map_corank(hyp6, BundleExpr(HypBundle{4, 1})).has_value());
}

TEST_CASE("Gaussian kernel dimensions") {
  CurveClass hyp5 = CurveClass::hyperelliptic(5);
  CHECK(gaussian_kernel_dim(hyp5, BundleExpr(HypBundle{8, 0})) == 24);

  CurveClass g3 = CurveClass::genus3_quartic();
  CHECK(gaussian_kernel_dim(g3, BundleExpr(G3Bundle{4, 0})) == 3);

  // genus 2: the factor h0((g-3)*pencil) vanishes
  CurveClass hyp2 = CurveClass::hyperelliptic(2);
  CHECK(gaussian_kernel_dim(hyp2, BundleExpr(HypBundle{4, 0})) == 0);

  // kernel formula factors: h0((g-3)g) * h0(L - 2g)
  for (long long g = 3; g <= 9; ++g) {
    CurveClass c = CurveClass::hyperelliptic(g);
    for (long long a = 2; a <= g + 3; ++a)
      CHECK(gaussian_kernel_dim(c, BundleExpr(HypBundle{a, 0})) ==
            (g - 2) * h0_hyperelliptic(g, a - 2, 0));
  }
}

TEST_CASE("Gaussian coranks of hyperelliptic polarizations") {
  // degree 2g+3 general bundles always have corank 2g+2
  for (long long g = 2; g <= 12; ++g) {
    CurveClass c = CurveClass::hyperelliptic(g);
    CorankResult r = gaussian_corank(c, BundleExpr(HypGeneral{2 * g + 3}));
    CHECK(r.cork == 2 * g + 2);
    REQUIRE(r.mult_cork.has_value());
    CHECK(*r.mult_cork == 0);
  }

  // worked low-degree splittings
  CurveClass hyp2 = CurveClass::hyperelliptic(2);
  CorankResult r = gaussian_corank(hyp2, BundleExpr(HypBundle{3, 1}));
  CHECK(r.cork == 6);

  CurveClass hyp5 = CurveClass::hyperelliptic(5);
  r = gaussian_corank(hyp5, BundleExpr(HypGeneral{13}));
  CHECK(r.cork == 12);
  CHECK(r.rule == "hyperelliptic-pencil");
}

TEST_CASE("Gaussian coranks on the plane quartic") {
  CurveClass g3 = CurveClass::genus3_quartic();

  CorankResult r = gaussian_corank(g3, BundleExpr(G3Bundle{3, 0}));
  CHECK(r.cork == 3);  // tricanonical

  r = gaussian_corank(g3, BundleExpr(G3Bundle{4, 6}));  // degree 10
  CHECK(r.cork == 4);

  r = gaussian_corank(g3, BundleExpr(G3Bundle{4, 4, true}));  // degree 12
  CHECK(r.cork == 3);

  r = gaussian_corank(g3, BundleExpr(G3Bundle{5, 3}));  // degree 17
  CHECK(r.cork == 0);
}

TEST_CASE("ribbon spaces are projectivized coranks") {
  CurveClass g3 = CurveClass::genus3_quartic();
  CHECK(ribbon_space_dim(g3, BundleExpr(G3Bundle{4, 0})) == Int(0));
  CHECK(ribbon_space_dim(g3, BundleExpr(G3Bundle{5, 3})) == Int(-1));

  for (long long g = 2; g <= 9; ++g) {
    CurveClass c = CurveClass::hyperelliptic(g);
    CHECK(ribbon_space_dim(c, BundleExpr(HypGeneral{2 * g + 3})) ==
          Int(2 * g + 1));
  }

  // undetermined multiplication corank propagates
  CurveClass hyp6 = CurveClass::hyperelliptic(6);
  CHECK_FALSE(ribbon_space_dim(hyp6, BundleExpr(HypBundle{4, 1})).has_value());
}

TEST_CASE("bookkeeping identity over hyperelliptic splittings") {
  for (long long g = 2; g <= 15; ++g) {
    CurveClass c = CurveClass::hyperelliptic(g);
    for (long long d = 2 * g + 3; d <= 4 * g + 8; ++d) {
      check_bookkeeping(c, BundleExpr(HypGeneral{d}));
      for (long long a = 0; 2 * a <= d; ++a)
        check_bookkeeping(c, BundleExpr(HypBundle{a, d - 2 * a}));
    }
  }
}

TEST_CASE("bookkeeping identity over plane-quartic bundles") {
  CurveClass c = CurveClass::genus3_quartic();
  for (long long d = 9; d <= 16; ++d) {
    check_bookkeeping(c, BundleExpr(G3Bundle{4, 16 - d}));
    if (16 - d <= 4)
      check_bookkeeping(c, BundleExpr(G3Bundle{4, 16 - d, true}));
  }
  for (long long d = 17; d <= 18; ++d)
    check_bookkeeping(c, BundleExpr(G3Bundle{5, 20 - d}));
}

TEST_CASE("corank via non-effective bundles") {
  CurveClass g3 = CurveClass::genus3_quartic();
  // c*K - r pts with negative degree: domain of the Gaussian map is 0 and
  // the corank equals h0(2K + L)
  G3Bundle L{0, 3};  // degree -3
  CorankResult r = gaussian_corank(g3, BundleExpr(L));
  CHECK(r.rule == "non-effective");
  CHECK(r.cork == h0_canonical_twist(g3, BundleExpr(L), 2));
  CHECK(r.ker_dim == 0);
}

TEST_CASE("coranks reject unclassified curves") {
  CurveClass trig = CurveClass::trigonal(7, 3, 6);
  TrigBundle tb;
  tb.n = 5;
  CHECK_THROWS_AS(gaussian_corank(trig, BundleExpr(tb)), KindError);
  CHECK_THROWS_AS(gaussian_kernel_dim(trig, BundleExpr(tb)), KindError);
}

TEST_CASE("pluricanonical coranks at low genus") {
  CurveClass g3 = CurveClass::genus3_quartic();
  CHECK(pluricanonical_corank(g3, 2) == 6);
  CHECK(pluricanonical_corank(g3, 3) == 3);
  CHECK(pluricanonical_corank(g3, 4) == 1);
  CHECK(pluricanonical_corank(g3, 5) == 0);

  std::vector<std::string> warnings;
  pluricanonical_corank(g3, 2, &warnings);
  REQUIRE(warnings.size() == 1);

  CurveClass g4 = CurveClass::general_clifford(4, 1);
  CHECK(pluricanonical_corank(g4, 2) == 5);
  CHECK(pluricanonical_corank(g4, 3) == 1);
  CHECK(pluricanonical_corank(g4, 4) == 0);
}

TEST_CASE("pluricanonical coranks agree with the direct Gaussian ones") {
  CurveClass g3 = CurveClass::genus3_quartic();
  for (long long m = 2; m <= 4; ++m)
    CHECK(gaussian_corank(g3, BundleExpr(G3Bundle{m, 0})).cork ==
          pluricanonical_corank(g3, m));
}

TEST_CASE("bicanonical coranks for genus at least five") {
  CHECK(pluricanonical_corank(CurveClass::trigonal(5, 3, 4), 2) == 3);
  CHECK(pluricanonical_corank(CurveClass::trigonal(6, 4, 4), 2) == 2);
  CHECK(pluricanonical_corank(CurveClass::trigonal(7, 3, 6), 2) == 2);
  CHECK(pluricanonical_corank(CurveClass::trigonal(7, 4, 5), 2) == 1);
  CHECK(pluricanonical_corank(CurveClass::plane_quintic(), 2) == 3);
  CHECK(pluricanonical_corank(CurveClass::plane_sextic(), 2) == 1);
  CHECK(pluricanonical_corank(CurveClass::del_pezzo_bianticanonical(7), 2) == 1);
  CHECK(pluricanonical_corank(CurveClass::bielliptic(6), 2) == 1);
  CHECK(pluricanonical_corank(CurveClass::general_clifford(5, 2), 2) == 3);
  CHECK(pluricanonical_corank(CurveClass::general_clifford(9, 3), 2) == 0);
  CHECK(pluricanonical_corank(CurveClass::general_clifford(9, 2), 2) == 0);

  // trigonal bicanonical coranks vanish once the genus passes 10
  for (long long g = 11; g <= 14; ++g) {
    long long a = (g + 2) / 2, b = g + 2 - a;
    if (a > b) std::swap(a, b);
    CHECK(pluricanonical_corank(CurveClass::trigonal(g, a, b), 2) == 0);
  }

  // everything vanishes for m >= 3 at genus >= 5
  CHECK(pluricanonical_corank(CurveClass::plane_quintic(), 3) == 0);
  CHECK(pluricanonical_corank(CurveClass::trigonal(8, 4, 6), 5) == 0);

  CHECK_THROWS_AS(pluricanonical_corank(CurveClass::bielliptic(5), 2),
                  KindError);
  CHECK_THROWS_AS(pluricanonical_corank(CurveClass::hyperelliptic(6), 2),
                  KindError);
  CHECK_THROWS_AS(pluricanonical_corank(CurveClass::plane_quintic(), 1),
                  DomainError);
}
