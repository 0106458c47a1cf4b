#pragma once

#include <string>
#include <utility>

#include "twist8/algebra/rational.hpp"

namespace twist8 {

/// Standard invariants of a Weierstrass model.
struct Invariants {
  Rational b2, b4, b6, b8, c4, c6, disc, j;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q, nonsingular.
class Curve {
 public:
  /// Throws std::domain_error("singular model") when the discriminant vanishes.
  Curve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6);
  /// y^2 = x^3 + a x + b
  static Curve short_weierstrass(const Rational& a, const Rational& b);

  const Rational& a1() const { return a1_; }
  const Rational& a2() const { return a2_; }
  const Rational& a3() const { return a3_; }
  const Rational& a4() const { return a4_; }
  const Rational& a6() const { return a6_; }
  const Invariants& invariants() const { return inv_; }
  const Rational& c4() const { return inv_.c4; }
  const Rational& c6() const { return inv_.c6; }
  const Rational& discriminant() const { return inv_.disc; }
  const Rational& j_invariant() const { return inv_.j; }

  bool is_short() const { return a1_ == 0 && a2_ == 0 && a3_ == 0; }
  bool is_integral() const;

  /// e.g. "y^2 + x*y + y = x^3 - x^2 - 2*x"
  std::string to_string() const;

  friend bool operator==(const Curve& x, const Curve& y) {
    return x.a1_ == y.a1_ && x.a2_ == y.a2_ && x.a3_ == y.a3_ && x.a4_ == y.a4_ && x.a6_ == y.a6_;
  }

 private:
  Rational a1_, a2_, a3_, a4_, a6_;
  Invariants inv_;
};

/// Invariants of the model given by the five coefficients. Throws
/// std::domain_error("singular model") when the discriminant vanishes.
Invariants invariants(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4,
                      const Rational& a6);
inline const Invariants& invariants(const Curve& c) { return c.invariants(); }

/// (a, b) = (-27 c4, -54 c6): the fixed short representative y^2 = x^3 + ax + b.
std::pair<Rational, Rational> short_form(const Curve& c);
inline Curve short_model(const Curve& c) {
  auto [a, b] = short_form(c);
  return Curve::short_weierstrass(a, b);
}

/// D = -4a^3 - 27b^2 for y^2 = x^3 + ax + b.
Rational discriminant_d(const Rational& a, const Rational& b);

/// True iff c4' = u^4 c4 and c6' = u^6 c6 for some rational u != 0.
bool is_q_isomorphic(const Curve& x, const Curve& y);

/// y^2 = x^3 + a d^2 x + b d^3 for the short model y^2 = x^3 + ax + b. A
/// general model is first replaced by its short_form. Throws for d = 0.
Curve quadratic_twist(const Curve& c, const Rational& d);

/// Scales (a1..a6) -> (u a1, u^2 a2, u^3 a3, u^4 a4, u^6 a6) with the least
/// positive integer u making every coefficient integral.
Curve integral_model(const Curve& c);

/// Admissible rescaling by u (coefficients a_i -> u^i a_i).
Curve scale_model(const Curve& c, const Rational& u);

/// The model obtained from x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
Curve change_coordinates(const Curve& c, const Rational& u, const Rational& r, const Rational& s, const Rational& t);

}  // namespace twist8
