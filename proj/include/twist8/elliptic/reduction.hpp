#pragma once

#include <cstdint>
#include <string>

#include "twist8/elliptic/curve.hpp"

namespace twist8 {

enum class ReductionType { good, split, nonsplit, additive };

std::string to_string(ReductionType t);
/// Inverse of to_string; throws std::invalid_argument.
ReductionType parse_reduction_type(const std::string& s);

struct ReductionInfo {
  std::int64_t p = 0;
  ReductionType type = ReductionType::good;
  std::int64_t np = 0;  // all projective points of the reduction, singular point included
  std::int64_t ap = 0;  // p + 1 - np
  long vdelta = 0;      // valuation of the discriminant of the model used
  bool possibly_non_minimal = false;
  bool rescaled = false;  // the input was not p-integral and was rescaled by a power of p

  friend bool operator==(const ReductionInfo& x, const ReductionInfo& y) {
    return x.p == y.p && x.type == y.type && x.np == y.np && x.ap == y.ap && x.vdelta == y.vdelta;
  }
};

/// Counts the points of the reduction mod p and classifies it. A model that
/// is not p-integral is first rescaled by the least power of p that makes it
/// so. Bad-prime semantics assume the resulting model is minimal at p; the
/// possibly_non_minimal flag is raised when v(disc) >= 12 and v(c4) >= 4.
ReductionInfo count_points(const Curve& c, std::int64_t p);
inline ReductionInfo reduction_type(const Curve& c, std::int64_t p) { return count_points(c, p); }

/// Convenience: a_p only.
std::int64_t trace_of_frobenius(const Curve& c, std::int64_t p);

/// The model rescaled by the least power of p making it p-integral.
Curve p_integral_model(const Curve& c, std::int64_t p);

/// A model minimal at p (other primes are not controlled). For p >= 5 this
/// is the short model y^2 = x^3 - 27 c4 x - 54 c6 rescaled at p; for p = 2, 3
/// the p-integral model is descended one factor of p at a time while some
/// change of coordinates with u = p keeps it p-integral.
Curve minimal_model_at(const Curve& c, std::int64_t p);

}  // namespace twist8
