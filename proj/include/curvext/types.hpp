#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace curvext {

// All arithmetic in the library is exact. Quantities that can grow with the
// inputs (degrees, dimension counts, monomial counts) use an
// arbitrary-precision integer; rational coefficients live in poly.hpp.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class ErrorKind {
  Domain,
  KindMismatch,
  Parity,
  MixedSurface,
  Negativity,
  Maroni,
  Range,
  Integrality,
  NoUniversal,
  Homogeneity,
  Arity,
  Parse,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

#define CURVEXT_DEFINE_ERROR(Name, Kind)                                     \
  class Name : public Error {                                                \
  public:                                                                    \
    explicit Name(const std::string& msg) : Error(ErrorKind::Kind, msg) {}   \
  }

CURVEXT_DEFINE_ERROR(DomainError, Domain);
CURVEXT_DEFINE_ERROR(KindError, KindMismatch);
CURVEXT_DEFINE_ERROR(ParityError, Parity);
CURVEXT_DEFINE_ERROR(MixedSurfaceError, MixedSurface);
CURVEXT_DEFINE_ERROR(NegativityError, Negativity);
CURVEXT_DEFINE_ERROR(MaroniError, Maroni);
CURVEXT_DEFINE_ERROR(RangeError, Range);
CURVEXT_DEFINE_ERROR(IntegralityError, Integrality);
CURVEXT_DEFINE_ERROR(NoUniversalError, NoUniversal);
CURVEXT_DEFINE_ERROR(HomogeneityError, Homogeneity);
CURVEXT_DEFINE_ERROR(ArityError, Arity);
CURVEXT_DEFINE_ERROR(ParseError, Parse);

#undef CURVEXT_DEFINE_ERROR

// Checked narrowing for loop bounds and container sizes.
inline long long to_ll(const Int& v, const char* what = "value") {
  if (v < std::numeric_limits<long long>::min() ||
      v > std::numeric_limits<long long>::max())
    throw RangeError(std::string(what) + " does not fit in 64 bits");
  return v.convert_to<long long>();
}

inline Int max0(const Int& v) { return v < 0 ? Int(0) : v; }

}  // namespace curvext
