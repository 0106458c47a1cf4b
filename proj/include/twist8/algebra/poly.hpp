#pragma once

// Sparse multivariate polynomials over Q in at most four named variables.
// Binary operations merge the operands' variable lists, so constants and
// polynomials in different subsets of variables combine freely.

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "twist8/algebra/rational.hpp"
#include "twist8/algebra/upoly.hpp"

namespace twist8 {

inline constexpr std::size_t kMaxVars = 4;
using Exponents = std::array<int, kMaxVars>;

class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT
  Poly(int c) : Poly(Rational(static_cast<long>(c))) {}  // NOLINT

  static Poly variable(std::string_view name);
  /// The variable `name` in a polynomial ring with the given ordered variables.
  static Poly variable(const std::vector<std::string>& vars, std::string_view name);
  static Poly from_upoly(const UPoly& f, std::string_view var);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; meaningful as "the value" only when is_constant().
  Rational constant_term() const;

  int degree_in(std::string_view var) const;
  int total_degree() const;
  /// True iff `var` occurs with positive degree.
  bool depends_on(std::string_view var) const;

  /// Same polynomial over a different (superset) variable ordering.
  Poly with_variables(const std::vector<std::string>& vars) const;

  /// Coefficients of var^0, var^1, ... as polynomials in the other variables.
  std::vector<Poly> coefficients_in(std::string_view var) const;
  Poly substitute(std::string_view var, const Poly& value) const;
  Poly substitute(std::string_view var, const Rational& value) const;
  Rational evaluate(const std::map<std::string, Rational>& values) const;
  /// Requires every variable other than `var` to be absent.
  UPoly to_upoly(std::string_view var) const;
  /// Partial derivative.
  Poly derivative(std::string_view var) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Human- and machine-readable form, e.g. "-a*a2^2 + 2*a0*a2 + 2/9".
  std::string to_string() const;

 private:
  int index_of(std::string_view var) const;
  void align_with(const Poly& o);

  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

Poly pow(const Poly& f, unsigned e);

/// Parses the format produced by Poly::to_string (and ordinary infix input
/// with +, -, *, ^, parentheses and rational literals). Variables are taken
/// in order of first appearance unless `vars` is given.
Poly parse_poly(std::string_view text, const std::vector<std::string>& vars = {});

}  // namespace twist8
