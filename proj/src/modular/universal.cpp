#include "twist8/modular/universal.hpp"

#include <stdexcept>

#include "twist8/elliptic/torsion.hpp"

namespace twist8 {

namespace {

Poly var(const char* name) { return Poly::variable(name); }

Rational r(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

bool is_x4_cusp(const Rational& u) {
  const Rational u4 = u * u * u * u;
  return u == 0 || 16 * u4 == 1;
}

Poly eu_a4(const Poly& u) {
  return Poly(r(-27)) * (Poly(r(256)) * pow(u, 8) + Poly(r(224)) * pow(u, 4) + Poly(1L));
}

Poly eu_a6(const Poly& u) {
  return Poly(r(-54)) * (Poly(r(-4096)) * pow(u, 12) + Poly(r(8448)) * pow(u, 8) + Poly(r(528)) * pow(u, 4) -
                         Poly(1L));
}

Poly pu_x(const Poly& u) {
  return Poly(r(48)) * pow(u, 4) - Poly(r(144)) * pow(u, 3) + Poly(r(72)) * pow(u, 2) - Poly(r(36)) * u +
         Poly(3L);
}

Poly pu_y(const Poly& u) {
  return Poly(r(1728)) * pow(u, 5) - Poly(r(1728)) * pow(u, 4) + Poly(r(864)) * pow(u, 3) -
         Poly(r(432)) * pow(u, 2) + Poly(r(108)) * u;
}

Poly qu_x(const Poly& u) { return Poly(r(48)) * pow(u, 4) - Poly(15L); }

X4Universal x4_universal(const Rational& u) {
  if (is_x4_cusp(u)) throw std::domain_error("cusp");
  const std::map<std::string, Rational> at{{"u", u}};
  const Poly U = var("u");
  X4Universal out{Curve::short_weierstrass(eu_a4(U).evaluate(at), eu_a6(U).evaluate(at)),
                  ECPoint<Rational>::affine(pu_x(U).evaluate(at), pu_y(U).evaluate(at)),
                  QuotientAlgebra::simple("i", {r(-1), r(0)}),
                  {}};
  const auto& gi = out.gaussian;
  const Rational u4 = u * u * u * u;
  out.q = ECPoint<AlgebraElement>::affine(gi->constant(qu_x(U).evaluate(at)),
                                          gi->gen("i") * Rational(864 * u4 - 54));

  const auto model = rational_model(out.curve);
  if (!on_curve(model, out.p)) throw std::logic_error("P_u not on E_u");
  if (ec_order(model, out.p, 4) != 4) throw std::logic_error("P_u does not have order 4");
  const WeierstrassModel<AlgebraElement> gmodel{gi->zero(), gi->zero(), gi->zero(), gi->constant(out.curve.a4()),
                                                gi->constant(out.curve.a6())};
  if (!on_curve(gmodel, out.q)) throw std::logic_error("Q_u not on E_u");
  if (ec_order(gmodel, out.q, 4) != 4) throw std::logic_error("Q_u does not have order 4");
  const auto p2 = ec_double(model, out.p);
  const auto q2 = ec_double(gmodel, out.q);
  if (is_zero(gi->constant(p2.x) - q2.x)) throw std::logic_error("2P_u and 2Q_u coincide");
  return out;
}

Poly half_point_quartic_f() {
  const Poly x = var("x"), u = var("u");
  const Poly shift = x - pu_x(u);
  const Poly w = Poly(r(2)) * u - Poly(1L);
  const Poly inner = x - Poly(r(48)) * pow(u, 4) - Poly(r(72)) * pow(u, 2) - Poly(3L);
  return pow(shift, 4) + Poly(r(1296)) * u * pow(w, 4) * (Poly(r(4)) * pow(u, 2) + Poly(1L)) * pow(inner, 2);
}

Poly half_point_quartic_g() {
  const Poly x = var("x"), u = var("u");
  const Poly shift = x - Poly(r(48)) * pow(u, 4) + Poly(15L);
  const Poly inner = x + Poly(r(96)) * pow(u, 4) + Poly(6L);
  return pow(shift, 4) + Poly(r(1296)) * (Poly(r(16)) * pow(u, 4) - Poly(1L)) * pow(inner, 2);
}

namespace {

// x(2R) = (x^4 - 2Ax^2 - 8Bx + A^2) / (4(x^3 + Ax + B)); numerator of x(2R) - x0.
Poly duplication_numerator(const Poly& x0) {
  const Poly x = var("x"), u = var("u");
  const Poly a = eu_a4(u), b = eu_a6(u);
  const Poly num = pow(x, 4) - Poly(r(2)) * a * pow(x, 2) - Poly(r(8)) * b * x + a * a;
  const Poly den = Poly(r(4)) * (pow(x, 3) + a * x + b);
  return num - x0 * den;
}

bool proportional_in_x(const Poly& lhs, const Poly& rhs) {
  // Both are monic of degree 4 in x, so proportionality means equality.
  return lhs == rhs;
}

}  // namespace

Poly duplication_numerator_p() { return duplication_numerator(pu_x(var("u"))); }
Poly duplication_numerator_q() { return duplication_numerator(qu_x(var("u"))); }

bool half_point_quartic_check(const Rational& u) {
  if (is_x4_cusp(u)) throw std::domain_error("cusp");
  auto at = [&](const Poly& p) { return p.substitute("u", u).to_upoly("x"); };
  const UPoly dp = at(duplication_numerator_p()), fq = at(half_point_quartic_f());
  const UPoly dq = at(duplication_numerator_q()), gq = at(half_point_quartic_g());
  if (dp.degree() != 4 || dq.degree() != 4) return false;
  return dp == fq * dp.leading() && dq == gq * dq.leading();
}

bool half_point_quartic_identity() {
  return proportional_in_x(duplication_numerator_p(), half_point_quartic_f()) &&
         proportional_in_x(duplication_numerator_q(), half_point_quartic_g());
}

std::shared_ptr<const QuotientAlgebra> x8_fiber_algebra(const Rational& u) {
  using Rel = QuotientAlgebra::Relation;
  return QuotientAlgebra::create({
      Rel{"zeta", 4, {{{0}, r(-1)}}},
      Rel{"X1", 2, {{{0, 0}, u * u - r(1, 4)}}},
      Rel{"X2", 2, {{{0, 0, 0}, u * u + r(1, 4)}}},
      Rel{"X3", 2, {{{0, 0, 0, 0}, -u}}},
  });
}

namespace {

// Evaluates sum_k c_k X^k for the listed (power, coefficient) pairs.
AlgebraElement xpoly(const AlgebraElement& x, std::initializer_list<std::pair<unsigned, long>> terms) {
  AlgebraElement acc = x.algebra().zero();
  for (const auto& [e, c] : terms) acc += pow(x, e) * Rational(c);
  return acc;
}

}  // namespace

X8Report x8_universal_check(const Rational& u) {
  if (is_x4_cusp(u)) throw std::domain_error("cusp");
  X8Report rep;
  rep.u = u;
  const auto alg = x8_fiber_algebra(u);
  rep.dimension = alg->dimension();
  const AlgebraElement z = alg->gen("zeta"), x1 = alg->gen("X1"), x2 = alg->gen("X2"), x3 = alg->gen("X3");
  const AlgebraElement z2 = z * z, z3 = z2 * z;
  const AlgebraElement x3_4 = pow(x3, 4), x3_8 = pow(x3, 8);

  const AlgebraElement px = Rational(-36) * xpoly(x3, {{5, 4}, {4, 4}, {3, 4}, {2, 2}, {1, 1}}) * x2 +
                            xpoly(x3, {{8, 48}, {7, 144}, {6, 144}, {5, 72}, {4, 72}, {3, 36}, {2, 36}, {1, 18}, {0, 3}});
  const AlgebraElement py =
      Rational(108) * xpoly(x3, {{9, 16}, {8, 32}, {7, 32}, {6, 32}, {5, 24}, {4, 16}, {3, 8}, {2, 4}, {1, 1}}) * x2 -
      xpoly(x3, {{11, 1728}, {10, 3456}, {9, 4320}, {8, 3456}, {7, 2592}, {6, 1728}, {5, 1296}, {4, 864}, {3, 540},
                 {2, 216}, {1, 54}});
  const AlgebraElement qx = Rational(-72) * z2 * x1 * x2 + (Rational(72) * (z3 + z) * x3_4 + Rational(18) * (z3 + z)) * x1 +
                            (Rational(72) * (z3 - z) * x3_4 - Rational(18) * (z3 - z)) * x2 + Rational(48) * x3_8 -
                            alg->constant(r(15));
  const AlgebraElement qy =
      Rational(432) * x1 * x2 +
      (Rational(864) * (z - z3) * x3_8 + Rational(432) * (z3 - z) * x3_4 + Rational(162) * (z3 - z)) * x1 +
      (Rational(-864) * (z3 + z) * x3_8 - Rational(432) * (z3 + z) * x3_4 + Rational(162) * (z3 + z)) * x2 +
      Rational(1728) * z2 * x3_8 - Rational(108) * z2;

  const Poly U = var("u");
  const std::map<std::string, Rational> at{{"u", u}};
  const WeierstrassModel<AlgebraElement> model{alg->zero(), alg->zero(), alg->zero(),
                                               alg->constant(eu_a4(U).evaluate(at)),
                                               alg->constant(eu_a6(U).evaluate(at))};
  const auto p = ECPoint<AlgebraElement>::affine(px, py);
  const auto q = ECPoint<AlgebraElement>::affine(qx, qy);
  rep.on_curve = on_curve(model, p);
  rep.q8_on_curve = on_curve(model, q);
  try {
    const auto p2 = ec_double(model, p);
    const auto p4 = ec_double(model, p2);
    const auto p8 = ec_double(model, p4);
    rep.order8 = p8.infinity && !p4.infinity;
    rep.doubles_to_pu = !p2.infinity && p2.x == alg->constant(pu_x(U).evaluate(at));
  } catch (const NotUnitError& e) {
    rep.inconclusive = true;
    rep.note = std::string(e.what()) + " at u = " + to_string(u) + "; retry with a different u";
  }
  return rep;
}

X8Report x8_universal_check_with_retry(const Rational& u) {
  Rational cur = u;
  X8Report rep;
  for (int attempt = 0; attempt < 10; ++attempt) {
    if (!is_x4_cusp(cur)) {
      rep = x8_universal_check(cur);
      if (!rep.inconclusive) return rep;
    }
    cur += 1;
  }
  rep.inconclusive = true;
  rep.note = "non-invertible denominators at ten sample values of u";
  return rep;
}

}  // namespace twist8
