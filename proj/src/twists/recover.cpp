#include "twist8/twists/recover.hpp"

#include <stdexcept>

#include "twist8/modular/family.hpp"

namespace twist8 {

Curve recover_curve(const Rational& a, const Rational& b, int r, const X8Point& p) {
  const TwistSystem sys = build_system(a, b, r);
  if (!on_system(sys, p)) throw std::invalid_argument("point not on curve");
  return family_x4(a, b, p.t, sys.forgetful_power);
}

}  // namespace twist8
