#pragma once

// Regenerated reference tables: the trigonal scroll table, the bicanonical
// corank cases by Clifford index, and the plane-quartic twist values.

#include <optional>
#include <string>
#include <vector>

#include "curvext/cohomology.hpp"
#include "curvext/gaussian.hpp"
#include "curvext/surface.hpp"
#include "curvext/types.hpp"

namespace curvext {

struct TrigonalRow {
  Int g;
  Int a, b;          // Maroni invariants
  Int h0_sub;        // h^0((g-4)*pencil)
  Int h0_K_minus;    // h^0(K - (g-4)*pencil) = cork of the bicanonical Gaussian
  RuledDivisor cls;  // canonical class of the curve on its scroll
  std::string cls_str;
};

// All Maroni pairs of a given genus, largest a first.
inline std::vector<std::pair<Int, Int>> maroni_pairs(const Int& g) {
  if (g < 3) throw DomainError("Maroni invariants need genus >= 3");
  std::vector<std::pair<Int, Int>> out;
  long long s = to_ll(Int(g + 2), "g + 2");
  for (long long a = s / 2; a >= 1; --a) {
    long long b = s - a;
    if (b < a || b > 2 * a) continue;
    out.push_back({Int(a), Int(b)});
  }
  return out;
}

inline std::vector<TrigonalRow> trigonal_table_rows(const Int& g) {
  if (g < 5) throw DomainError("the trigonal table starts at genus 5");
  std::vector<TrigonalRow> out;
  for (const auto& [a, b] : maroni_pairs(g)) {
    TrigonalRow row;
    row.g = g;
    row.a = a;
    row.b = b;
    row.h0_sub = h0_trigonal(g, a, b, g - 4);
    row.h0_K_minus = h0_K_minus_trigonal(g, a, b, g - 4);
    row.cls = maroni_to_class(g, a, b);
    row.cls_str = row.cls.str_with_surface();
    out.push_back(row);
  }
  return out;
}

// The full table for genus 5 through 10.
inline std::vector<TrigonalRow> trigonal_table() {
  std::vector<TrigonalRow> out;
  for (long long g = 5; g <= 10; ++g)
    for (TrigonalRow& row : trigonal_table_rows(Int(g)))
      out.push_back(std::move(row));
  return out;
}

struct PluricanRow {
  std::string curve;
  std::optional<Int> cork;  // nullopt: depends on further class data
  std::string note;
};

// Bicanonical Gaussian coranks for genus >= 5, grouped by Clifford index.
inline std::vector<PluricanRow> plurican_corank_table(const Int& cliff) {
  if (cliff < 0) throw DomainError("Clifford index must be >= 0");
  if (cliff == 0)
    throw KindError("hyperelliptic curves are outside the bicanonical case table");
  std::vector<PluricanRow> out;
  if (cliff == 1) {
    out.push_back({"plane quintic (genus 6)",
                   pluricanonical_corank(CurveClass::plane_quintic(), 2), ""});
    out.push_back({"trigonal", std::nullopt,
                   "h^0(K - (g-4)*pencil); see the trigonal table"});
    return out;
  }
  if (cliff == 2) {
    out.push_back(
        {"general Clifford-2 curve of genus 5",
         pluricanonical_corank(CurveClass::general_clifford(5, 2), 2), ""});
    out.push_back(
        {"del Pezzo bi-anticanonical",
         pluricanonical_corank(CurveClass::del_pezzo_bianticanonical(6), 2),
         "independent of the del Pezzo degree"});
    out.push_back({"bielliptic",
                   pluricanonical_corank(CurveClass::bielliptic(6), 2),
                   "genus >= 6"});
    return out;
  }
  out.push_back({"Clifford index >= 3",
                 pluricanonical_corank(
                     CurveClass::general_clifford(2 * cliff + 1, cliff), 2),
                 "all m >= 2"});
  return out;
}

struct QuarticTwistRow {
  Int d;            // degree of L = 4K - (16-d) points
  Int general;      // h^0(4K - L) for points in general position
  Int aligned;      // h^0(4K - L) for collinear points
};

// h^0(4K - L) for bundles L = 4K - (16-d) points on a plane quartic,
// degree 9 through 16; above 16 the value is 0.
inline std::vector<QuarticTwistRow> genus3_lemma_table() {
  std::vector<QuarticTwistRow> out;
  for (long long d = 9; d <= 16; ++d) {
    QuarticTwistRow row;
    row.d = d;
    row.general = h0_fourK_minus_L_by_degree(Int(d), false);
    row.aligned = h0_fourK_minus_L_by_degree(Int(d), true);
    out.push_back(row);
  }
  return out;
}

}  // namespace curvext
