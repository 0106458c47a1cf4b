#pragma once

// Dense univariate polynomials over Q.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twist8/algebra/rational.hpp"

namespace twist8 {

class UPoly {
 public:
  UPoly() = default;
  /// Coefficients from the constant term upward.
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(const Rational& c);  // NOLINT: constants convert implicitly
  UPoly(long c) : UPoly(Rational(c)) {}  // NOLINT

  static UPoly monomial(const Rational& c, int degree);
  static UPoly x() { return monomial(Rational(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Rational& coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  /// Substitutes x -> inner.
  UPoly compose(const UPoly& inner) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& c);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
  friend UPoly operator*(const Rational& c, UPoly a) { return a *= c; }
  friend UPoly operator-(UPoly a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws std::domain_error on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Exact quotient; throws std::domain_error if the remainder is nonzero.
UPoly exact_div(const UPoly& a, const UPoly& b);
/// Monic gcd (zero only when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly square_free_part(const UPoly& f);
UPoly pow(const UPoly& f, unsigned e);

/// All rational roots of a nonzero polynomial, each listed once, ordered by
/// absolute value with the positive root first on ties. Roots are located by
/// p-adic lifting on the primitive integer model and confirmed exactly.
/// Throws std::domain_error("identically zero") for the zero polynomial.
std::vector<Rational> rational_roots(const UPoly& f);

/// Primitive integer model: a positive rational multiple of f with coprime
/// integer coefficients.
std::vector<Integer> primitive_integer_coeffs(const UPoly& f);

/// Canonical ordering used for root lists.
bool root_order_less(const Rational& x, const Rational& y);

}  // namespace twist8
