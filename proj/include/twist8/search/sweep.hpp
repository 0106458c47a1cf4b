#pragma once

#include <optional>
#include <vector>

#include "twist8/search/fiber.hpp"

namespace twist8 {

enum class SearchMode { fiber, sweep, surface };

struct SearchConfig {
  /// Height bound max(|num|, |den|); values below 1 are treated as 1.
  long height = 1;
  int r = 1;
  Rational a, b;
  SearchMode mode = SearchMode::sweep;
  /// The fixed fiber in fiber mode.
  std::optional<Rational> t;
  /// Surface mode (b = a): explicit a values; empty means every a of
  /// height <= height.
  std::vector<Rational> a_values;
};

struct SweepHit {
  Rational a, b;
  X8Point point;  // representative of the pair {P, partner(P)}
  bool partner_on_system = false;
};

/// Every reduced fraction of height <= h exactly once, ordered by height,
/// then denominator, then numerator.
std::vector<Rational> rationals_of_height(long h);

/// The representative of {P, partner(P)}: the first nonzero of a0, a1, a2 is
/// positive.
X8Point canonical_pair_representative(const X8Point& p);

std::vector<SweepHit> sweep(const SearchConfig& config);

}  // namespace twist8
