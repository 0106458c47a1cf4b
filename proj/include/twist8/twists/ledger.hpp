#pragma once

#include <array>
#include <memory>
#include <optional>

#include "twist8/algebra/quotient_algebra.hpp"

namespace twist8 {

/// Scaling factors alpha_{r,j}. The three factors are the conjugates of one
/// element `alpha` of L = Q[theta]/(theta^3 + a theta + b); when the cubic
/// splits over Q the conjugates are also given as rationals, indexed by the
/// roots in canonical order.
struct ScalingLedger {
  int r = 1;
  Rational a, b;
  std::shared_ptr<const QuotientAlgebra> field;
  AlgebraElement alpha;
  std::optional<std::array<Rational, 3>> split;
  /// alpha_3 / (D alpha_7) is a square in L (always true for r != 3).
  bool consistent = true;
};

/// alpha_1 = 1, alpha_5 = D, alpha_7 = delta = -(3 theta^2 + a) and
/// alpha_3 = (theta_2 - theta_3)^2 delta_1 = D / delta, with D = -4a^3 - 27b^2.
ScalingLedger scaling_factors(const Rational& a, const Rational& b, int r);

/// delta_j = (theta_j - theta_k)(theta_l - theta_j) as an element of L.
AlgebraElement delta_element(const std::shared_ptr<const QuotientAlgebra>& field, const Rational& a);

}  // namespace twist8
