#include "twist8/elliptic/reduction.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <vector>

namespace twist8 {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t p) {
  x %= p;
  return x < 0 ? x + p : x;
}

std::int64_t mulmod(std::int64_t x, std::int64_t y, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(x) * y) % p);
}

struct Reduced {
  std::int64_t a1, a2, a3, a4, a6;
};

// Point count on y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_2.
std::int64_t count_p2(const Reduced& r) {
  std::int64_t n = 1;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const std::int64_t lhs = y * y + r.a1 * x * y + r.a3 * y;
      const std::int64_t rhs = x * x * x + r.a2 * x * x + r.a4 * x + r.a6;
      if ((lhs - rhs) % 2 == 0) ++n;
    }
  }
  return n;
}

// Odd p: complete the square, (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
std::int64_t count_odd(const Reduced& r, std::int64_t p) {
  std::vector<signed char> chi(static_cast<std::size_t>(p), -1);
  chi[0] = 0;
  for (std::int64_t y = 1; y <= p / 2; ++y) chi[static_cast<std::size_t>(mulmod(y, y, p))] = 1;
  const std::int64_t b2 = mod(r.a1 * r.a1 + 4 * r.a2, p);
  const std::int64_t b4 = mod(2 * r.a4 + r.a1 * r.a3, p);
  const std::int64_t b6 = mod(r.a3 * r.a3 + 4 * r.a6, p);
  std::int64_t n = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    // Horner: ((4x + b2) x + 2 b4) x + b6
    std::int64_t v = mod(4 * x + b2, p);
    v = mod(mulmod(v, x, p) + 2 * b4, p);
    v = mod(mulmod(v, x, p) + b6, p);
    n += 1 + chi[static_cast<std::size_t>(v)];
  }
  return n;
}

// Number of distinct roots in F_p of m^2 + a1 m - c (tangent-cone slopes),
// and whether the root is repeated.
std::pair<int, bool> cone_roots(std::int64_t a1, std::int64_t c, std::int64_t p) {
  int roots = 0;
  for (std::int64_t m = 0; m < p; ++m) {
    if (mod(mulmod(m, m, p) + mulmod(a1, m, p) - c, p) == 0) ++roots;
  }
  const std::int64_t disc = mod(mulmod(a1, a1, p) + 4 * c, p);
  const bool repeated = p == 2 ? mod(a1, 2) == 0 : disc == 0;
  return {roots, repeated};
}

ReductionType classify_singular(const Reduced& r, std::int64_t p) {
  // Locate the singular point by brute force.
  for (std::int64_t x = 0; x < p; ++x) {
    // For odd p the partial in y pins y = -(a1 x + a3)/2.
    const std::int64_t y_lo = p == 2 ? 0 : mulmod(mod(-(r.a1 * x + r.a3), p), (p + 1) / 2, p);
    const std::int64_t y_hi = p == 2 ? 1 : y_lo;
    for (std::int64_t y = y_lo; y <= y_hi; ++y) {
      const std::int64_t f = mod(mulmod(y, y, p) + mulmod(mulmod(r.a1, x, p), y, p) + mulmod(r.a3, y, p) -
                                     mulmod(mulmod(x, x, p), x, p) - mulmod(mulmod(r.a2, x, p), x, p) -
                                     mulmod(r.a4, x, p) - r.a6,
                                 p);
      if (f != 0) continue;
      const std::int64_t fx = mod(mulmod(r.a1, y, p) - 3 * mulmod(x, x, p) - 2 * mulmod(r.a2, x, p) - r.a4, p);
      const std::int64_t fy = mod(2 * y + mulmod(r.a1, x, p) + r.a3, p);
      if (fx != 0 || fy != 0) continue;
      // Tangent cone at the singular point: Y^2 + a1 XY - (3 x0 + a2) X^2.
      const auto [roots, repeated] = cone_roots(r.a1, mod(3 * x + r.a2, p), p);
      if (repeated) return ReductionType::additive;
      return roots == 2 ? ReductionType::split : ReductionType::nonsplit;
    }
  }
  throw std::logic_error("singular reduction without a singular point");
}

}  // namespace

std::string to_string(ReductionType t) {
  switch (t) {
    case ReductionType::good:
      return "good";
    case ReductionType::split:
      return "multiplicative-split";
    case ReductionType::nonsplit:
      return "multiplicative-nonsplit";
    case ReductionType::additive:
      return "additive";
  }
  return "?";
}

ReductionType parse_reduction_type(const std::string& s) {
  for (auto t : {ReductionType::good, ReductionType::split, ReductionType::nonsplit, ReductionType::additive}) {
    if (to_string(t) == s) return t;
  }
  throw std::invalid_argument("unknown reduction type '" + s + "'");
}

Curve p_integral_model(const Curve& c, std::int64_t p) {
  const Integer P(static_cast<long>(p));
  const Rational* coeffs[] = {&c.a1(), &c.a2(), &c.a3(), &c.a4(), &c.a6()};
  const int weights[] = {1, 2, 3, 4, 6};
  long e = 0;
  for (int k = 0; k < 5; ++k) {
    if (*coeffs[k] == 0) continue;
    const long v = valuation(*coeffs[k], P);
    if (v < 0) e = std::max(e, (-v + weights[k] - 1) / weights[k]);
  }
  if (e == 0) return c;
  Integer u;
  mpz_pow_ui(u.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(e));
  return scale_model(c, Rational(u));
}

namespace {

bool p_integral(const Rational& x, const Integer& p) { return x == 0 || valuation(x, p) >= 0; }

bool p_integral(const Curve& c, const Integer& p) {
  return p_integral(c.a1(), p) && p_integral(c.a2(), p) && p_integral(c.a3(), p) && p_integral(c.a4(), p) &&
         p_integral(c.a6(), p);
}

long val_or_inf(const Rational& x, const Integer& p) {
  return x == 0 ? std::numeric_limits<long>::max() / 2 : valuation(x, p);
}

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

Curve minimal_model_at(const Curve& input, std::int64_t p) {
  const Integer P(static_cast<long>(p));
  if (p >= 5) {
    const long k = std::min(floor_div(val_or_inf(input.c4(), P), 4), floor_div(val_or_inf(input.c6(), P), 6));
    Rational s4 = 1, s6 = 1;
    const Rational pk = k >= 0 ? Rational(P) : Rational(1) / Rational(P);
    for (long i = 0; i < (k >= 0 ? k : -k); ++i) {
      s4 *= pk * pk * pk * pk;
      s6 *= pk * pk * pk * pk * pk * pk;
    }
    return Curve::short_weierstrass(-27 * input.c4() / s4, -54 * input.c6() / s6);
  }
  Curve c = p_integral_model(input, p);
  const Rational u(P);
  while (valuation(c.discriminant(), P) >= 12) {
    bool stepped = false;
    for (long s = 0; s < p && !stepped; ++s) {
      for (long r = 0; r < p * p && !stepped; ++r) {
        for (long t = 0; t < p * p * p && !stepped; ++t) {
          Curve next = change_coordinates(c, u, Rational(r), Rational(s), Rational(t));
          if (p_integral(next, P)) {
            c = next;
            stepped = true;
          }
        }
      }
    }
    if (!stepped) break;
  }
  return c;
}

ReductionInfo count_points(const Curve& input, std::int64_t p) {
  if (p < 2 || !is_prime(Integer(static_cast<long>(p)))) throw std::invalid_argument("p must be prime");
  ReductionInfo info;
  info.p = p;
  const Curve c = p_integral_model(input, p);
  info.rescaled = !(c == input);
  const Reduced r{reduce_mod(c.a1(), p), reduce_mod(c.a2(), p), reduce_mod(c.a3(), p), reduce_mod(c.a4(), p),
                  reduce_mod(c.a6(), p)};
  info.np = p == 2 ? count_p2(r) : count_odd(r, p);
  info.ap = p + 1 - info.np;
  const Integer P(static_cast<long>(p));
  info.vdelta = valuation(c.discriminant(), P);
  if (info.vdelta == 0) {
    info.type = ReductionType::good;
  } else {
    info.type = classify_singular(r, p);
    info.possibly_non_minimal = info.vdelta >= 12 && (c.c4() == 0 || valuation(c.c4(), P) >= 4);
  }
  return info;
}

std::int64_t trace_of_frobenius(const Curve& c, std::int64_t p) { return count_points(c, p).ap; }

}  // namespace twist8
