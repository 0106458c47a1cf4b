#pragma once

#include <string_view>
#include <vector>

#include "twist8/algebra/poly.hpp"
#include "twist8/algebra/upoly.hpp"

namespace twist8 {

/// Sylvester resultant of f and g with respect to `var`. The inputs may
/// involve at most one further variable; the result is a polynomial in that
/// variable (or a constant). Throws std::invalid_argument("variable absent")
/// when neither input involves `var`.
Poly resultant(const Poly& f, const Poly& g, std::string_view var);

/// Fraction-free (Bareiss) determinant of a square matrix over Q[y].
UPoly bareiss_determinant(std::vector<std::vector<UPoly>> m);

}  // namespace twist8
