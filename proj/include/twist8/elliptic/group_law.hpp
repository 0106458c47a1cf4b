#pragma once

// Chord-tangent addition over any commutative coefficient ring R offering
// +, -, *, scalar multiplication by Rational, is_zero(R) and inverse(R)
// (the latter throwing NotUnitError for non-units). Instantiated for Rational
// and AlgebraElement.

#include <stdexcept>

#include "twist8/algebra/quotient_algebra.hpp"
#include "twist8/algebra/rational.hpp"

namespace twist8 {

template <class R>
struct WeierstrassModel {
  R a1, a2, a3, a4, a6;
};

template <class R>
struct ECPoint {
  bool infinity = true;
  R x{}, y{};

  static ECPoint at_infinity() { return ECPoint{}; }
  static ECPoint affine(R px, R py) { return ECPoint{false, std::move(px), std::move(py)}; }
};

template <class R>
bool on_curve(const WeierstrassModel<R>& m, const ECPoint<R>& p) {
  if (p.infinity) return true;
  const R lhs = p.y * p.y + m.a1 * p.x * p.y + m.a3 * p.y;
  const R rhs = p.x * p.x * p.x + m.a2 * p.x * p.x + m.a4 * p.x + m.a6;
  return is_zero(lhs - rhs);
}

template <class R>
ECPoint<R> ec_negate(const WeierstrassModel<R>& m, const ECPoint<R>& p) {
  if (p.infinity) return p;
  return ECPoint<R>::affine(p.x, Rational(-1) * p.y - m.a1 * p.x - m.a3);
}

template <class R>
bool ec_equal(const ECPoint<R>& p, const ECPoint<R>& q) {
  if (p.infinity || q.infinity) return p.infinity == q.infinity;
  return is_zero(p.x - q.x) && is_zero(p.y - q.y);
}

template <class R>
ECPoint<R> ec_add(const WeierstrassModel<R>& m, const ECPoint<R>& p, const ECPoint<R>& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  R lambda, nu;
  if (is_zero(p.x - q.x)) {
    const R tangent_den = p.y + q.y + m.a1 * q.x + m.a3;
    if (is_zero(tangent_den)) return ECPoint<R>::at_infinity();
    if (!is_zero(p.y - q.y)) throw NotUnitError("non-invertible denominator");
    const R den = p.y * Rational(2) + m.a1 * p.x + m.a3;
    const R inv = inverse(den);
    lambda = (p.x * p.x * Rational(3) + m.a2 * p.x * Rational(2) + m.a4 - m.a1 * p.y) * inv;
    nu = (Rational(-1) * p.x * p.x * p.x + m.a4 * p.x + m.a6 * Rational(2) - m.a3 * p.y) * inv;
  } else {
    const R inv = inverse(q.x - p.x);
    lambda = (q.y - p.y) * inv;
    nu = (p.y * q.x - q.y * p.x) * inv;
  }
  const R x3 = lambda * lambda + m.a1 * lambda - m.a2 - p.x - q.x;
  const R y3 = Rational(-1) * (lambda + m.a1) * x3 - nu - m.a3;
  return ECPoint<R>::affine(x3, y3);
}

template <class R>
ECPoint<R> ec_double(const WeierstrassModel<R>& m, const ECPoint<R>& p) {
  return ec_add(m, p, p);
}

/// n >= 0; double-and-add.
template <class R>
ECPoint<R> ec_mul(const WeierstrassModel<R>& m, ECPoint<R> p, unsigned long n) {
  ECPoint<R> acc = ECPoint<R>::at_infinity();
  while (n) {
    if (n & 1UL) acc = ec_add(m, acc, p);
    n >>= 1UL;
    if (n) p = ec_double(m, p);
  }
  return acc;
}

/// Exact order when it is at most `bound`, else 0.
template <class R>
unsigned long ec_order(const WeierstrassModel<R>& m, const ECPoint<R>& p, unsigned long bound) {
  ECPoint<R> acc = p;
  for (unsigned long k = 1; k <= bound; ++k) {
    if (acc.infinity) return k;
    acc = ec_add(m, acc, p);
  }
  return 0;
}

}  // namespace twist8
