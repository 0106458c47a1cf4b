#include "twist8/modular/family.hpp"

#include <stdexcept>

#include "twist8/cocycle/lemmas.hpp"
#include "twist8/elliptic/torsion.hpp"

namespace twist8 {

std::shared_ptr<const QuotientAlgebra> cubic_algebra(const Rational& a, const Rational& b) {
  return QuotientAlgebra::simple("theta", {-b, -a, Rational(0)});
}

CuspData cusp_data(const Rational& a, const Rational& b) {
  if (discriminant_d(a, b) == 0) throw std::domain_error("singular model");
  auto field = cubic_algebra(a, b);
  const AlgebraElement theta = field->gen("theta");
  CuspData out{field, theta * make_rational(-2, 3),
               (theta * theta * Rational(2) + field->constant(a)) * make_rational(-1, 9), std::nullopt};
  if (auto roots = split_two_torsion(a, b)) {
    std::array<std::pair<Rational, Rational>, 3> pairs;
    for (std::size_t j = 0; j < 3; ++j) {
      const Rational& t = (*roots)[j];
      pairs[j] = {make_rational(-2, 3) * t, -(2 * t * t + a) / 9};
    }
    out.split = pairs;
  }
  return out;
}

const FamilyPolys& family_polys() {
  static const FamilyPolys polys = [] {
    const std::vector<std::string> vars{"t", "c4", "c6"};
    const Poly t = Poly::variable(vars, "t"), c4 = Poly::variable(vars, "c4"), c6 = Poly::variable(vars, "c6");
    auto k = [](long v) { return Poly(Rational(v)); };
    FamilyPolys f;
    f.a_e = c4 * pow(t, 8) + k(8) * c6 * pow(t, 7) + k(28) * pow(c4, 2) * pow(t, 6) + k(56) * c4 * c6 * pow(t, 5) +
            (k(-42) * pow(c4, 3) + k(112) * pow(c6, 2)) * pow(t, 4) + k(56) * pow(c4, 2) * c6 * pow(t, 3) +
            (k(252) * pow(c4, 4) - k(224) * c4 * pow(c6, 2)) * pow(t, 2) +
            (k(264) * pow(c4, 3) * c6 - k(256) * pow(c6, 3)) * t + (k(81) * pow(c4, 5) - k(80) * pow(c4, 2) * pow(c6, 2));
    f.b_e = c6 * pow(t, 12) + k(12) * pow(c4, 2) * pow(t, 11) + k(66) * c4 * c6 * pow(t, 10) +
            (k(44) * pow(c4, 3) + k(176) * pow(c6, 2)) * pow(t, 9) + k(495) * pow(c4, 2) * c6 * pow(t, 8) +
            k(792) * pow(c4, 4) * pow(t, 7) + k(924) * pow(c4, 3) * c6 * pow(t, 6) +
            (k(-2376) * pow(c4, 5) + k(3168) * pow(c4, 2) * pow(c6, 2)) * pow(t, 5) +
            (k(-5841) * pow(c4, 4) * c6 + k(6336) * c4 * pow(c6, 3)) * pow(t, 4) +
            (k(-1188) * pow(c4, 6) - k(4224) * pow(c4, 3) * pow(c6, 2) + k(5632) * pow(c6, 4)) * pow(t, 3) +
            (k(-4158) * pow(c4, 5) * c6 + k(4224) * pow(c4, 2) * pow(c6, 3)) * pow(t, 2) +
            (k(-2916) * pow(c4, 7) + k(4464) * pow(c4, 4) * pow(c6, 2) - k(1536) * c4 * pow(c6, 4)) * t +
            (k(-1215) * pow(c4, 6) * c6 + k(2240) * pow(c4, 3) * pow(c6, 3) - k(1024) * pow(c6, 5));
    return f;
  }();
  return polys;
}

std::pair<UPoly, UPoly> family_polys_at(const Rational& a, const Rational& b) {
  const Rational c4 = -a / 27, c6 = -b / 54;
  const auto& f = family_polys();
  return {f.a_e.substitute("c4", c4).substitute("c6", c6).to_upoly("t"),
          f.b_e.substitute("c4", c4).substitute("c6", c6).to_upoly("t")};
}

Curve family_x4(const Rational& a, const Rational& b, const Rational& t, int power) {
  if (power != 1 && power != 3) throw std::invalid_argument("power must be 1 or 3");
  const auto [ae, be] = family_polys_at(a, b);
  Rational A = -27 * ae(t), B = -54 * be(t);
  if (power == 3) {
    const Rational delta = -16 * (4 * a * a * a + 27 * b * b);
    A *= delta * delta;
    B *= delta * delta * delta;
  }
  try {
    return Curve::short_weierstrass(A, B);
  } catch (const std::domain_error&) {
    throw std::domain_error("cusp value t");
  }
}

bool check_lemma_3_1() { return verify_group_lemma(GroupLemma::L3_1).pass; }

}  // namespace twist8
