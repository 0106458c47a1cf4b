#pragma once

#include <array>
#include <memory>
#include <optional>

#include "twist8/algebra/poly.hpp"
#include "twist8/algebra/quotient_algebra.hpp"
#include "twist8/elliptic/curve.hpp"

namespace twist8 {

/// Sums m_j and products l_j of the cusp pairs, as elements of
/// L = Q[theta]/(theta^3 + a theta + b) and, when the 2-torsion is rational,
/// as explicit rational pairs in the canonical root order.
struct CuspData {
  std::shared_ptr<const QuotientAlgebra> field;
  AlgebraElement m;  // -(2/3) theta
  AlgebraElement l;  // -(2 theta^2 + a)/9
  std::optional<std::array<std::pair<Rational, Rational>, 3>> split;
};

/// L = Q[theta]/(theta^3 + a theta + b).
std::shared_ptr<const QuotientAlgebra> cubic_algebra(const Rational& a, const Rational& b);

CuspData cusp_data(const Rational& a, const Rational& b);

struct FamilyPolys {
  Poly a_e;  // in t, c4, c6; degree 8 in t
  Poly b_e;  // degree 12 in t
};

const FamilyPolys& family_polys();

/// a_E(t), b_E(t) at c4 = -a/27, c6 = -b/54 as univariate polynomials in t.
std::pair<UPoly, UPoly> family_polys_at(const Rational& a, const Rational& b);

/// Power 1: y^2 = x^3 - 27 a_E(t) x - 54 b_E(t). Power 3: the same twisted by
/// the discriminant Delta_E = -16(4a^3 + 27b^2). Throws
/// std::domain_error("cusp value t") for a singular member and
/// std::invalid_argument for other powers.
Curve family_x4(const Rational& a, const Rational& b, const Rational& t, int power);

/// phi = [[1,2],[2,3]] commutes with the GL2(Z/4) generators up to the
/// sqrt(Delta) sign rule; delegates to the cocycle tables.
bool check_lemma_3_1();

}  // namespace twist8
