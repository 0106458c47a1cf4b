#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "twist8/algebra/poly.hpp"
#include "twist8/algebra/rational.hpp"

namespace twist8 {

struct X8Point {
  Rational t, a0, a1, a2;
  /// (t, -a0, -a1, -a2), the partner point under the [3] automorphism.
  X8Point partner() const { return {t, -a0, -a1, -a2}; }
  bool operator==(const X8Point& o) const { return t == o.t && a0 == o.a0 && a1 == o.a1 && a2 == o.a2; }
  bool operator<(const X8Point& o) const;
  std::string to_string() const;
};

/// The three quadrics cutting out X^r_E(8) in A^4(t, a0, a1, a2).
/// Generic in the coefficient ring so the same formulas serve numeric
/// evaluation, polynomial systems and parametrised identity checks.
template <class R>
std::array<R, 3> twist_equations(const R& a, const R& b, int r, const R& t, const R& a0, const R& a1, const R& a2) {
  auto q = [](long n, long d = 1) { return R(make_rational(n, d)); };
  const R qf = -a * a2 * a2 + q(2) * a0 * a2 + a1 * a1;
  const R qg = q(-2) * a * a1 * a2 - b * a2 * a2 + q(2) * a0 * a1;
  const R qh = q(-2) * b * a1 * a2 + a0 * a0;
  switch (r) {
    case 1:
      return {qf + q(2, 9), qg + q(2, 3) * t, qh - t * t + a * q(1, 9)};
    case 5: {
      const R d = q(-4) * a * a * a - q(27) * b * b;
      return {qf + q(2, 9) * d, qg + q(2, 3) * d * t, qh + d * (-t * t + a * q(1, 9))};
    }
    case 3:
      return {q(-2, 9) * a * a + q(6) * a * t * t + q(6) * b * t - qf,
              q(4, 3) * a * a * t + q(1, 3) * a * b - q(9) * b * t * t - qg,
              q(-4, 9) * a * a * a + q(4) * a * a * t * t + q(4) * a * b * t - q(2) * b * b - qh};
    case 7:
      return {q(3) * t * t + a * q(1, 9) + qf, q(4, 3) * a * t + q(2, 3) * b + qg,
              a * t * t + q(2) * b * t - q(1, 9) * a * a + qh};
    default:
      throw std::invalid_argument("r must be 1, 3, 5 or 7");
  }
}

struct TwistSystem {
  int r = 1;
  Rational a, b;
  Poly f, g, h;  // in t, a0, a1, a2
  int forgetful_power = 1;
};

/// Variables of every system, in order.
const std::vector<std::string>& system_variables();

/// Throws std::invalid_argument for r outside {1, 3, 5, 7}. A singular
/// (a, b) is accepted: the quadrics still make sense there and degenerate
/// members of parametrised families are evaluated through them.
TwistSystem build_system(const Rational& a, const Rational& b, int r);

std::array<Rational, 3> evaluate(const TwistSystem& sys, const X8Point& p);
bool on_system(const TwistSystem& sys, const X8Point& p);

int forgetful_power(int r);

}  // namespace twist8
