#pragma once

#include "twist8/elliptic/curve.hpp"
#include "twist8/twists/system.hpp"

namespace twist8 {

/// The curve attached to a rational point of X^r_E(8) through the forgetful
/// map to X_E(4) (r = 1, 5) or X^3_E(4) (r = 3, 7). Throws
/// std::invalid_argument("point not on curve") and, from family_x4,
/// std::domain_error("cusp value t").
Curve recover_curve(const Rational& a, const Rational& b, int r, const X8Point& p);

}  // namespace twist8
