#pragma once

// Exact integers and rationals (GMP-backed) plus the number-theoretic
// helpers the rest of the library leans on.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace twist8 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n", "-n", "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

/// "p/q", or "n" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// max(|numerator|, denominator)
Integer height(const Rational& x);

/// p-adic valuation of a nonzero rational; negative when p divides the
/// denominator. Throws std::domain_error("valuation of zero").
long valuation(const Rational& x, const Integer& p);
long valuation(const Integer& x, const Integer& p);

/// True iff x*y is the square of a rational. Throws std::domain_error for a
/// zero argument.
bool square_class_equal(const Rational& x, const Rational& y);

/// True iff x is the square of a rational (0 counts as a square).
bool is_rational_square(const Rational& x);

/// Exact square root when x is a rational square.
Rational rational_sqrt(const Rational& x);

bool is_prime(const Integer& p);

/// Reduces a rational modulo a prime p (p must not divide the denominator).
std::int64_t reduce_mod(const Rational& x, std::int64_t p);

/// Raised when an element that is required to be invertible is not.
class NotUnitError : public std::domain_error {
 public:
  explicit NotUnitError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace twist8
