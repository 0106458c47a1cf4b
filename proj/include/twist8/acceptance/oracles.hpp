#pragma once

// Independent reference computations used only for cross-checking.

#include <cstdint>
#include <random>
#include <set>

#include "twist8/algebra/rational.hpp"
#include "twist8/algebra/upoly.hpp"
#include "twist8/twists/system.hpp"

namespace twist8::acceptance {

/// Uniform rational with max(|num|, den) <= height.
Rational random_rational(std::mt19937_64& rng, long height);

/// (a, b) of y^2 = x^3 + a x + b with three distinct rational 2-torsion
/// roots e1, e2, -e1-e2 drawn at the given height.
std::pair<Rational, Rational> random_split_curve(std::mt19937_64& rng, long height);

/// x^6 + 5a x^4 + 20b x^3 - 5a^2 x^2 - 4ab x - 8b^2 - a^3, written out.
UPoly primitive_four_division_closed_form(const Rational& a, const Rational& b);

/// Numerator of cubic(x(2P)) where cubic = x^3 + a x + b and x(2P) is the
/// duplication map. Its roots are the x with 2P of exact order 2, each
/// counted twice, so it should be a constant times the sextic squared.
UPoly doubling_preimage_polynomial(const Rational& a, const Rational& b);

/// Every point of the fiber over t with a1 and a2 of height <= height,
/// found by exhaustive enumeration. a0 is eliminated through the first
/// equation, which is linear in it when a2 != 0; when a2 == 0 a0 is
/// enumerated too. Floating-point screening, exact confirmation.
std::set<X8Point> grid_fiber(const Rational& a, const Rational& b, int r, const Rational& t, long height);

}  // namespace twist8::acceptance
