#pragma once

#include <array>
#include <string>
#include <vector>

#include "twist8/algebra/poly.hpp"

namespace twist8 {

enum class OracleVerdict { match, match_after_t_negation, no_match };
enum class OracleMode { algebra, split };

std::string to_string(OracleVerdict v);

/// Outcome of rebuilding X^r_E(8) from its scaling factor by expanding
///   alpha (t^2 - m t + l) - (a0 + a1 theta + a2 theta^2)^2
/// and reading off the coefficients of theta^2, theta, 1.
struct OracleReport {
  int r = 1;
  OracleMode mode = OracleMode::algebra;
  /// Coefficients of theta^2, theta, 1 (compared against f, g, h).
  std::array<Poly, 3> reconstructed;
  OracleVerdict verdict = OracleVerdict::no_match;
  /// reconstructed = factor * (f, g, h), possibly after t -> -t.
  Rational factor;
  std::vector<std::string> details;
};

/// Algebra mode works in Q[theta]/(theta^3 + a theta + b) and always applies.
/// Split mode needs three rational roots: it evaluates each conjugate
/// equation separately and recovers the coefficients by a Vandermonde solve.
/// Throws std::invalid_argument when split mode is requested for a cubic that
/// does not split.
OracleReport coefficient_comparison_oracle(const Rational& a, const Rational& b, int r,
                                           OracleMode mode = OracleMode::algebra);

}  // namespace twist8
