#pragma once

// Quotients of multivariate polynomials, kept unreduced. Used to check
// parametrised identities (a point family substituted into a system) by
// testing whether the resulting numerator vanishes.

#include "twist8/algebra/poly.hpp"

namespace twist8 {

class RationalFunction {
 public:
  RationalFunction() : den_(1L) {}
  RationalFunction(const Poly& num) : num_(num), den_(1L) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(c), den_(1L) {}  // NOLINT
  RationalFunction(long c) : num_(c), den_(1L) {}              // NOLINT
  RationalFunction(int c) : num_(c), den_(1L) {}               // NOLINT
  RationalFunction(const Poly& num, const Poly& den);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(RationalFunction a) {
    a.num_ = -a.num_;
    return a;
  }
  /// Cross-multiplied comparison.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  Poly num_;
  Poly den_;
};

}  // namespace twist8
