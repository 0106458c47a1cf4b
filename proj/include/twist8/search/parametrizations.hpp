#pragma once

#include <string>

#include "twist8/algebra/rational_function.hpp"
#include "twist8/elliptic/curve.hpp"
#include "twist8/twists/system.hpp"

namespace twist8 {

// ---- two-parameter family on the b = a surface for r = 1 ----

struct Param71Result {
  Rational a;
  X8Point point;  // on build_system(a, a, 1)
  /// The closed forms for a and t as displayed with the parametrisation.
  Rational printed_a, printed_t;
};

Rational param_71_printed_a(const Rational& p, const Rational& q);
Rational param_71_printed_t(const Rational& p, const Rational& q);

/// Replays the birational chain: the conic in (w, a2) over Q(q) is cut by
/// the line of slope -p through its known rational point, and the second
/// intersection is pulled back through the substitutions to (t, a0, a1, a2).
/// Throws std::domain_error("degenerate parameter") on the excluded locus.
Param71Result param_71(const Rational& p, const Rational& q);

// ---- one-parameter families ----

enum class GenusZeroFamily { P73, P74, P75 };

std::string to_string(GenusZeroFamily f);
/// "P73", "P74", "P75"; throws std::invalid_argument.
GenusZeroFamily parse_genus_zero_family(const std::string& s);

struct GenusZeroPoint {
  GenusZeroFamily family;
  int r = 5;
  Rational a;  // b = a
  Curve curve;
  X8Point point;
};

/// The displayed point at parameter s (P75 is a single point and ignores s).
/// Throws std::domain_error("degenerate parameter") at poles or singular
/// members and std::logic_error("point not on system") when the displayed
/// point fails the system.
GenusZeroPoint param_genus0(GenusZeroFamily family, const Rational& s);

struct IsogenySection {
  int l = 5;
  int r = 5;
  Rational a, b;
  Curve curve;
  X8Point point;
};

/// Curves with a rational l-isogeny and the point of X^r(8) (r = 5, 3, 7 for
/// l = 5, 3, 7) giving the isogenous curve. Throws
/// std::domain_error("singular E_s").
IsogenySection isogeny_section(int l, const Rational& s);

/// j-invariant of the 5-isogenous curve F_s, as displayed.
Rational x05_isogenous_j(const Rational& s);

/// Whether the section (or family) satisfies its system identically in the
/// parameter, checked over Q(s) with exact rational functions.
bool isogeny_section_identity(int l);
bool genus_zero_identity(GenusZeroFamily family);

}  // namespace twist8
