#pragma once

// The universal level-4 family E_u with its marked 4-torsion, the half-point
// quartics, and the 8-torsion coordinates over the X(8) fiber algebra.

#include <memory>
#include <optional>
#include <string>

#include "twist8/algebra/poly.hpp"
#include "twist8/algebra/quotient_algebra.hpp"
#include "twist8/elliptic/curve.hpp"
#include "twist8/elliptic/group_law.hpp"

namespace twist8 {

struct X4Universal {
  Curve curve;                        // E_u
  ECPoint<Rational> p;                // P_u
  std::shared_ptr<const QuotientAlgebra> gaussian;  // Q(i)
  ECPoint<AlgebraElement> q;          // Q_u over Q(i)
};

bool is_x4_cusp(const Rational& u);

/// Throws std::domain_error("cusp") when u(16u^4 - 1) = 0. Also checks that
/// P_u and Q_u lie on E_u, both have exact order 4 and 2P_u != 2Q_u
/// (std::logic_error otherwise).
X4Universal x4_universal(const Rational& u);

/// The coefficients of E_u and the coordinates of P_u as polynomials in u.
Poly eu_a4(const Poly& u);
Poly eu_a6(const Poly& u);
Poly pu_x(const Poly& u);
Poly pu_y(const Poly& u);
Poly qu_x(const Poly& u);

/// The printed quartics f (half points of P_u) and g (half points of Q_u),
/// as polynomials in x and u.
Poly half_point_quartic_f();
Poly half_point_quartic_g();

/// numerator(x(2R) - x(P_u)) from the duplication map, as a polynomial in
/// (x, u); likewise for Q_u.
Poly duplication_numerator_p();
Poly duplication_numerator_q();

/// Both quartics match the duplication numerators at this u.
bool half_point_quartic_check(const Rational& u);
/// The same identities with u kept symbolic.
bool half_point_quartic_identity();

struct X8Report {
  Rational u;
  std::size_t dimension = 0;
  bool on_curve = false;
  bool order8 = false;
  bool doubles_to_pu = false;
  bool q8_on_curve = false;
  bool inconclusive = false;
  std::string note;
};

/// The 32-dimensional algebra Q[zeta, X1, X2, X3] with zeta^4 = -1,
/// X1^2 = u^2 - 1/4, X2^2 = u^2 + 1/4, X3^2 = -u.
std::shared_ptr<const QuotientAlgebra> x8_fiber_algebra(const Rational& u);

/// Substitutes the printed 8-torsion coordinates and checks them. A
/// non-invertible denominator marks the report inconclusive.
X8Report x8_universal_check(const Rational& u);

/// Tries the given u and then further samples until a conclusive report is
/// obtained or ten attempts are used up.
X8Report x8_universal_check_with_retry(const Rational& u);

}  // namespace twist8
