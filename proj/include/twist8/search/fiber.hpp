#pragma once

#include <vector>

#include "twist8/twists/system.hpp"

namespace twist8 {

struct FiberResult {
  std::vector<X8Point> points;  // sorted, each verified exactly
  /// Set when the elimination resultant vanished identically, so the fiber
  /// has a positive-dimensional piece that was not enumerated.
  bool degenerate = false;
};

/// All rational points of X^r_E(8) over a fixed t.
FiberResult solve_fiber_detailed(const Rational& a, const Rational& b, int r, const Rational& t);

inline std::vector<X8Point> solve_fiber(const Rational& a, const Rational& b, int r, const Rational& t) {
  return solve_fiber_detailed(a, b, r, t).points;
}

}  // namespace twist8
