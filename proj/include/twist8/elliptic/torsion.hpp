#pragma once

#include <array>
#include <optional>
#include <vector>

#include "twist8/algebra/upoly.hpp"
#include "twist8/elliptic/curve.hpp"
#include "twist8/elliptic/group_law.hpp"

namespace twist8 {

/// psi_n for y^2 = x^3 + ax + b written as poly(x) * y^(has_y ? 1 : 0).
struct DivisionPolynomial {
  UPoly poly;
  bool has_y = false;
};

/// psi_0 .. psi_n via the standard recurrence.
std::vector<DivisionPolynomial> division_polynomials(const Rational& a, const Rational& b, int n);

struct FourTorsionData {
  UPoly sextic;  // monic; roots are x-coordinates of primitive 4-torsion points
  /// Present when x^3 + ax + b splits over Q; roots ordered as rational_roots.
  std::optional<std::array<Rational, 3>> theta;
  std::optional<std::array<Rational, 3>> delta;
};

/// sextic = psi_4 / psi_2 made monic; when the 2-torsion is rational also the
/// delta triple delta_1 = (t1-t2)(t3-t1), delta_2 = (t1-t2)(t2-t3),
/// delta_3 = (t2-t3)(t3-t1), with prod_j ((x - t_j)^2 + delta_j) == sextic
/// checked (std::logic_error otherwise).
FourTorsionData four_torsion_data(const Rational& a, const Rational& b);

/// Independent oracle: sextic^2 must equal, up to a constant, the numerator
/// of "x(2P) is a root of x^3+ax+b", i.e. N^3 + 16 a N F^2 + 64 b F^3 with
/// N = x^4 - 2ax^2 - 8bx + a^2 and F = x^3 + ax + b.
UPoly duplication_two_torsion_numerator(const Rational& a, const Rational& b);

/// Rational roots of x^3 + ax + b in canonical order (empty unless all three
/// are rational; repeated roots cannot occur for a nonsingular curve).
std::optional<std::array<Rational, 3>> split_two_torsion(const Rational& a, const Rational& b);

WeierstrassModel<Rational> rational_model(const Curve& c);

}  // namespace twist8
