#include "twist8/search/fiber.hpp"

#include <algorithm>
#include <set>

#include "twist8/algebra/resultant.hpp"

namespace twist8 {

namespace {

// With t fixed every system reads
//   -a a2^2 + 2 a0 a2 + a1^2       = kf
//   -2a a1 a2 - b a2^2 + 2 a0 a1   = kg
//   -2b a1 a2 + a0^2               = kh.
struct FiberConstants {
  Rational kf, kg, kh;
};

FiberConstants fiber_constants(const Rational& a, const Rational& b, int r, const Rational& t) {
  const Rational zero(0);
  const auto c = twist_equations<Rational>(a, b, r, t, zero, zero, zero);
  // r = 3 subtracts the quadratic part; the others add it.
  const Rational s = r == 3 ? Rational(1) : Rational(-1);
  return {s * c[0], s * c[1], s * c[2]};
}

void add_a2_zero_branch(const FiberConstants& k, std::set<X8Point>& out, const Rational& t) {
  if (k.kf != 0) {
    if (!is_rational_square(k.kf)) return;
    const Rational a1 = rational_sqrt(k.kf);
    for (const Rational& s1 : {a1, Rational(-a1)}) {
      const Rational a0 = k.kg / (2 * s1);
      if (a0 * a0 == k.kh) out.insert({t, a0, s1, Rational(0)});
    }
    return;
  }
  if (k.kg != 0 || !is_rational_square(k.kh)) return;
  const Rational a0 = rational_sqrt(k.kh);
  out.insert({t, a0, Rational(0), Rational(0)});
  out.insert({t, -a0, Rational(0), Rational(0)});
}

}  // namespace

FiberResult solve_fiber_detailed(const Rational& a, const Rational& b, int r, const Rational& t) {
  forgetful_power(r);
  const FiberConstants k = fiber_constants(a, b, r, t);
  std::set<X8Point> found;
  FiberResult res;
  add_a2_zero_branch(k, found, t);

  // a2 != 0: a0 = (kf + a a2^2 - a1^2) / (2 a2), cleared into g and h.
  const std::vector<std::string> vars{"a1", "a2"};
  const Poly a1 = Poly::variable(vars, "a1"), a2 = Poly::variable(vars, "a2");
  const Poly num = Poly(k.kf) + Poly(a) * a2 * a2 - a1 * a1;  // 2 a2 a0
  const Poly g = Poly(-2 * a) * a1 * a2 * a2 * Poly(2) - Poly(2 * b) * pow(a2, 3) + Poly(2) * a1 * num -
                 Poly(2 * k.kg) * a2;
  const Poly h = Poly(-8 * b) * a1 * pow(a2, 3) + num * num - Poly(4 * k.kh) * a2 * a2;
  const Poly res_a2 = resultant(g, h, "a1");
  if (res_a2.is_zero()) {
    res.degenerate = true;
  } else if (!res_a2.is_constant()) {
    for (const Rational& v2 : rational_roots(res_a2.to_upoly("a2"))) {
      if (v2 == 0) continue;
      const UPoly gu = g.substitute("a2", v2).to_upoly("a1");
      const UPoly hu = h.substitute("a2", v2).to_upoly("a1");
      const UPoly common = gcd(gu, hu);
      if (common.is_zero()) {
        res.degenerate = true;
        continue;
      }
      for (const Rational& v1 : rational_roots(common)) {
        const Rational a0 = (k.kf + a * v2 * v2 - v1 * v1) / (2 * v2);
        found.insert({t, a0, v1, v2});
      }
    }
  }
  const TwistSystem sys = build_system(a, b, r);
  for (const auto& p : found) {
    if (on_system(sys, p)) res.points.push_back(p);
  }
  return res;
}

}  // namespace twist8
