#include "twist8/elliptic/torsion.hpp"

#include <stdexcept>

namespace twist8 {

namespace {

UPoly cubic(const Rational& a, const Rational& b) {
  return UPoly(std::vector<Rational>{b, a, Rational(0), Rational(1)});
}

// Product of psi values, tracking the y-power (y^2 is replaced by F).
DivisionPolynomial mul(const DivisionPolynomial& x, const DivisionPolynomial& y, const UPoly& f) {
  DivisionPolynomial r{x.poly * y.poly, x.has_y != y.has_y};
  if (x.has_y && y.has_y) r.poly *= f;
  return r;
}

DivisionPolynomial sub(const DivisionPolynomial& x, const DivisionPolynomial& y) {
  if (x.has_y != y.has_y && !x.poly.is_zero() && !y.poly.is_zero()) {
    throw std::logic_error("division polynomial parity mismatch");
  }
  return DivisionPolynomial{x.poly - y.poly, x.poly.is_zero() ? y.has_y : x.has_y};
}

}  // namespace

std::vector<DivisionPolynomial> division_polynomials(const Rational& a, const Rational& b, int n) {
  const UPoly f = cubic(a, b);
  const UPoly x = UPoly::x();
  std::vector<DivisionPolynomial> psi;
  psi.push_back({UPoly(), false});
  psi.push_back({UPoly(1L), false});
  psi.push_back({UPoly(2L), true});
  psi.push_back({UPoly(std::vector<Rational>{-a * a, 12 * b, 6 * a, Rational(0), Rational(3)}), false});
  psi.push_back({UPoly(4L) * UPoly(std::vector<Rational>{-8 * b * b - a * a * a, -4 * a * b, -5 * a * a, 20 * b,
                                                         5 * a, Rational(0), Rational(1)}),
                 true});
  for (int k = 5; k <= n; ++k) {
    const auto m = static_cast<std::size_t>(k / 2);
    DivisionPolynomial next;
    if (k % 2 == 1) {
      // psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
      const auto pm3 = mul(mul(psi[m], psi[m], f), psi[m], f);
      const auto pm1_3 = mul(mul(psi[m + 1], psi[m + 1], f), psi[m + 1], f);
      next = sub(mul(psi[m + 2], pm3, f), mul(psi[m - 1], pm1_3, f));
    } else {
      // psi_{2m} = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2) / (2y)
      const auto inner = sub(mul(psi[m + 2], mul(psi[m - 1], psi[m - 1], f), f),
                             mul(psi[m - 2], mul(psi[m + 1], psi[m + 1], f), f));
      auto full = mul(psi[m], inner, f);
      // Division by 2y: y-free part must be divisible by F.
      if (full.has_y) {
        next = {full.poly * Rational(1, 2), false};
      } else {
        next = {exact_div(full.poly, f) * Rational(1, 2), true};
      }
    }
    psi.push_back(next);
  }
  psi.resize(static_cast<std::size_t>(std::max(n, 0)) + 1);
  return psi;
}

UPoly duplication_two_torsion_numerator(const Rational& a, const Rational& b) {
  const UPoly f = cubic(a, b);
  const UPoly num(std::vector<Rational>{a * a, -8 * b, -2 * a, Rational(0), Rational(1)});
  return num * num * num + Rational(16) * a * num * f * f + Rational(64) * b * f * f * f;
}

std::optional<std::array<Rational, 3>> split_two_torsion(const Rational& a, const Rational& b) {
  const auto roots = rational_roots(cubic(a, b));
  if (roots.size() != 3) return std::nullopt;
  return std::array<Rational, 3>{roots[0], roots[1], roots[2]};
}

FourTorsionData four_torsion_data(const Rational& a, const Rational& b) {
  if (discriminant_d(a, b) == 0) throw std::domain_error("singular model");
  const auto psi = division_polynomials(a, b, 4);
  // psi_4 / psi_2: both carry one factor of y.
  FourTorsionData out;
  out.sextic = exact_div(psi[4].poly, psi[2].poly).monic();
  out.theta = split_two_torsion(a, b);
  if (out.theta) {
    const auto& t = *out.theta;
    out.delta = std::array<Rational, 3>{(t[0] - t[1]) * (t[2] - t[0]), (t[0] - t[1]) * (t[1] - t[2]),
                                        (t[1] - t[2]) * (t[2] - t[0])};
    UPoly prod(1L);
    for (int j = 0; j < 3; ++j) {
      const UPoly shifted(std::vector<Rational>{-t[j], Rational(1)});
      prod *= shifted * shifted + UPoly((*out.delta)[j]);
    }
    if (!(prod == out.sextic)) throw std::logic_error("four-torsion product identity failed");
  }
  return out;
}

WeierstrassModel<Rational> rational_model(const Curve& c) {
  return {c.a1(), c.a2(), c.a3(), c.a4(), c.a6()};
}

}  // namespace twist8
