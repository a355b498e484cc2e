#pragma once

// Intersection theory on Hirzebruch surfaces F_e (basis: section E with
// E^2 = -e, fibre F), plane linear systems with assigned base multiplicities,
// and the fixed invariants of the del Pezzo and bielliptic-cone families.

#include <cassert>
#include <sstream>
#include <string>
#include <vector>

#include "curvext/types.hpp"

namespace curvext {

struct RuledDivisor {
  Int e;  // Hirzebruch index, >= 0
  Int a;  // coefficient of E
  Int b;  // coefficient of F

  static RuledDivisor EF(Int e, Int a, Int b) {
    if (e < 0) throw DomainError("Hirzebruch index must be >= 0");
    return {std::move(e), std::move(a), std::move(b)};
  }

  // H = E + e*F, so h*H + f*F = h*E + (h*e + f)*F.
  static RuledDivisor HF(Int e, const Int& h, const Int& f) {
    if (e < 0) throw DomainError("Hirzebruch index must be >= 0");
    Int b = h * e + f;
    return {std::move(e), h, std::move(b)};
  }

  std::string str() const {
    std::ostringstream os;
    os << a << "E";
    if (b >= 0)
      os << "+" << b << "F";
    else
      os << b << "F";
    return os.str();
  }

  std::string str_with_surface() const {
    return str() + " on F_" + e.str();
  }
};

// Bilinear form: E^2 = -e, E.F = 1, F^2 = 0.
inline Int intersect(const RuledDivisor& d1, const RuledDivisor& d2) {
  if (d1.e != d2.e)
    throw MixedSurfaceError("divisors live on different Hirzebruch surfaces");
  return -d1.e * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b;
}

inline RuledDivisor canonical_class(const Int& e) {
  return RuledDivisor::EF(e, -2, -(e + 2));
}

// Arithmetic genus of a divisor class by adjunction.
inline Int adjunction_genus(const RuledDivisor& d) {
  Int t = intersect(d, d) + intersect(canonical_class(d.e), d);
  if (t % 2 != 0)
    throw ParityError("D^2 + K.D is odd; the class is not a curve class");
  return 1 + t / 2;
}

// h^0(F_e, aE + bF). The pushforward to P^1 splits as the sum of O(b - i*e)
// for i = 0..a, so the count is sum_i max(0, b - i*e + 1), evaluated in
// closed form.
inline Int h0_ruled(const RuledDivisor& d) {
  const Int &a = d.a, &b = d.b, &e = d.e;
  if (a < 0 || b < 0) return 0;
  if (e == 0) return (a + 1) * (b + 1);
  Int t = b / e;          // largest i with b - i*e >= 0
  if (t > a) t = a;
  return (t + 1) * (b + 1) - e * (t * (t + 1) / 2);
}

// --- Plane linear systems ----------------------------------------------

struct PlaneSystem {
  Int delta;                // degree of the plane curves
  std::vector<Int> mults;   // multiplicities of assigned base points
};

struct PlaneSystemInvariants {
  Int degree;          // delta^2 - sum m_i^2
  Int sectional_genus; // (delta-1)(delta-2)/2 - sum m_i(m_i-1)/2
  Int expected_dim;    // delta(delta+3)/2 - sum m_i(m_i+1)/2
};

inline PlaneSystemInvariants plane_system_invariants(const PlaneSystem& s) {
  if (s.delta < 1) throw DomainError("plane system degree must be >= 1");
  Int sq = 0, tri_down = 0, tri_up = 0;
  for (const Int& m : s.mults) {
    if (m < 1) throw DomainError("base multiplicities must be >= 1");
    sq += m * m;
    tri_down += m * (m - 1) / 2;
    tri_up += m * (m + 1) / 2;
  }
  PlaneSystemInvariants out;
  out.degree = s.delta * s.delta - sq;
  out.sectional_genus = (s.delta - 1) * (s.delta - 2) / 2 - tri_down;
  out.expected_dim = s.delta * (s.delta + 3) / 2 - tri_up;
  return out;
}

// --- Fixed families -----------------------------------------------------

struct DelPezzoInvariants {
  Int genus;
  Int degree;
  Int ambient;
  bool quadric = false;
};

// Bi-anticanonical curve on a del Pezzo surface obtained from P^2 by
// blowing up h points.
inline DelPezzoInvariants del_pezzo_bicanonical(const Int& h) {
  if (h < 0 || h > 7)
    throw DomainError("del Pezzo blow-up count must satisfy 0 <= h <= 7");
  return {10 - h, 4 * (9 - h), 27 - 3 * h, false};
}

// The degree-8 del Pezzo surface P^1 x P^1.
inline DelPezzoInvariants del_pezzo_bicanonical_quadric() {
  return {9, 32, 24, true};
}

struct BiellipticConeInvariants {
  Int ambient;        // 3g - 3
  Int degree;         // 4g - 4
  Int section_count;  // 1 + (g-1) + (2g-2)
};

// Cone over an elliptic normal curve, carrying a bielliptic curve of genus g.
inline BiellipticConeInvariants bielliptic_cone(const Int& g) {
  if (g < 4) throw DomainError("bielliptic cone case needs genus >= 4");
  return {3 * g - 3, 4 * g - 4, 3 * g - 2};
}

// --- Trigonal curve classes on Hirzebruch surfaces ----------------------

// Class of a genus-g trigonal curve on F_e: 3H + ((g - 3e + 2)/2) F.
inline RuledDivisor trigonal_surface_class(const Int& g, const Int& e) {
  if (e < 0) throw DomainError("Hirzebruch index must be >= 0");
  Int c = g - 3 * e + 2;
  if (c % 2 != 0)
    throw ParityError("g - 3e + 2 must be even for a trigonal class on F_e");
  if (c < 0)
    throw NegativityError("class meets the section negatively (g - 3e + 2 < 0)");
  RuledDivisor d = RuledDivisor::HF(e, 3, c / 2);
  assert(intersect(d, RuledDivisor::EF(e, 1, 0)) >= 0);
  assert(adjunction_genus(d) == g);
  return d;
}

// Same class from the Maroni invariants: e = b - a, class 3E + (2b - a)F.
inline RuledDivisor maroni_to_class(const Int& g, const Int& a, const Int& b) {
  if (a + b != g + 2 || a <= 0 || a > b || b > 2 * a)
    throw MaroniError("Maroni invariants must satisfy a+b=g+2, 0<a<=b<=2a");
  RuledDivisor d = RuledDivisor::EF(b - a, 3, 2 * b - a);
  assert(adjunction_genus(d) == g);
  return d;
}

}  // namespace curvext
