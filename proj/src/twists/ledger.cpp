#include "twist8/twists/ledger.hpp"

#include <stdexcept>

#include "twist8/elliptic/curve.hpp"
#include "twist8/elliptic/torsion.hpp"
#include "twist8/modular/family.hpp"
#include "twist8/twists/system.hpp"

namespace twist8 {

AlgebraElement delta_element(const std::shared_ptr<const QuotientAlgebra>& field, const Rational& a) {
  const AlgebraElement theta = field->gen("theta");
  // (t1 - t2)(t3 - t1) = -f'(t1) for f = x^3 + ax + b.
  return -(theta * theta * Rational(3) + field->constant(a));
}

ScalingLedger scaling_factors(const Rational& a, const Rational& b, int r) {
  forgetful_power(r);  // validates r
  const Rational d = discriminant_d(a, b);
  if (d == 0) throw std::domain_error("singular model");
  ScalingLedger led;
  led.r = r;
  led.a = a;
  led.b = b;
  led.field = cubic_algebra(a, b);
  const AlgebraElement delta = delta_element(led.field, a);
  switch (r) {
    case 1:
      led.alpha = led.field->one();
      break;
    case 5:
      led.alpha = led.field->constant(d);
      break;
    case 7:
      led.alpha = delta;
      break;
    case 3:
      led.alpha = d * delta.inverse();
      // alpha_3 / (D alpha_7) = delta^-2, a square.
      led.consistent = led.alpha * (d * delta).inverse() == pow(delta.inverse(), 2);
      break;
  }
  if (auto roots = split_two_torsion(a, b)) {
    const auto& th = *roots;
    std::array<Rational, 3> vals;
    for (std::size_t j = 0; j < 3; ++j) {
      const Rational& x = th[j];
      const Rational& y = th[(j + 1) % 3];
      const Rational& z = th[(j + 2) % 3];
      const Rational dj = (x - y) * (z - x);
      switch (r) {
        case 1:
          vals[j] = 1;
          break;
        case 5:
          vals[j] = d;
          break;
        case 7:
          vals[j] = dj;
          break;
        case 3:
          vals[j] = (y - z) * (y - z) * dj;
          break;
      }
    }
    led.split = vals;
    if (r == 3) {
      for (std::size_t j = 0; j < 3; ++j) {
        const Rational& x = th[j];
        const Rational dj = (x - th[(j + 1) % 3]) * (th[(j + 2) % 3] - x);
        led.consistent = led.consistent && square_class_equal(vals[j], d * dj);
      }
    }
  }
  return led;
}

}  // namespace twist8
