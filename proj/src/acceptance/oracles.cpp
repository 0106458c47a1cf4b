#include "twist8/acceptance/oracles.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace twist8::acceptance {

Rational random_rational(std::mt19937_64& rng, long height) {
  std::uniform_int_distribution<long> num(-height, height);
  std::uniform_int_distribution<long> den(1, height);
  return make_rational(num(rng), den(rng));
}

std::pair<Rational, Rational> random_split_curve(std::mt19937_64& rng, long height) {
  for (;;) {
    const Rational e1 = random_rational(rng, height);
    const Rational e2 = random_rational(rng, height);
    const Rational e3 = -e1 - e2;
    if (e1 == e2 || e1 == e3 || e2 == e3) continue;
    Rational a = e1 * e2 + e1 * e3 + e2 * e3;
    Rational b = -e1 * e2 * e3;
    return {a, b};
  }
}

UPoly primitive_four_division_closed_form(const Rational& a, const Rational& b) {
  return UPoly({-8 * b * b - a * a * a, -4 * a * b, -5 * a * a, 20 * b, 5 * a, Rational(0), Rational(1)});
}

UPoly doubling_preimage_polynomial(const Rational& a, const Rational& b) {
  // x(2P) = N / D with N = x^4 - 2a x^2 - 8b x + a^2, D = 4(x^3 + a x + b).
  const UPoly n({a * a, -8 * b, -2 * a, Rational(0), Rational(1)});
  const UPoly d({4 * b, 4 * a, Rational(0), Rational(4)});
  return n * n * n + a * n * d * d + b * d * d * d;
}

namespace {

// One equation of the fiber as a double-precision polynomial in a0, a1, a2.
class ApproxQuadric {
 public:
  ApproxQuadric(const Poly& eq, const Rational& t) {
    const Poly fixed = eq.substitute("t", t).with_variables(system_variables());
    const int i0 = 1, i1 = 2, i2 = 3;
    for (const auto& [e, c] : fixed.terms()) {
      terms_.push_back({c.get_d(), e[i0], e[i1], e[i2]});
    }
  }
  double operator()(double a0, double a1, double a2) const {
    double sum = 0.0;
    for (const auto& t : terms_) sum += t.c * ipow(a0, t.e0) * ipow(a1, t.e1) * ipow(a2, t.e2);
    return sum;
  }
  /// True when the value is zero up to rounding relative to the terms.
  bool near_zero(double a0, double a1, double a2) const {
    double sum = 0.0, size = 0.0;
    for (const auto& t : terms_) {
      const double v = t.c * ipow(a0, t.e0) * ipow(a1, t.e1) * ipow(a2, t.e2);
      sum += v;
      size += std::fabs(v);
    }
    return std::fabs(sum) <= 1e-9 * size;
  }

 private:
  static double ipow(double x, int e) {
    double r = 1.0;
    while (e-- > 0) r *= x;
    return r;
  }
  struct Term {
    double c;
    int e0, e1, e2;
  };
  std::vector<Term> terms_;
};

std::vector<Rational> grid_values(long height) {
  std::vector<Rational> out{Rational(0)};
  for (long d = 1; d <= height; ++d) {
    for (long n = 1; n <= height; ++n) {
      if (std::gcd(n, d) != 1) continue;
      out.push_back(make_rational(n, d));
      out.push_back(make_rational(-n, d));
    }
  }
  return out;
}

}  // namespace

std::set<X8Point> grid_fiber(const Rational& a, const Rational& b, int r, const Rational& t, long height) {
  const std::vector<Rational> values = grid_values(height);
  std::vector<double> approx;
  approx.reserve(values.size());
  for (const auto& v : values) approx.push_back(v.get_d());
  const TwistSystem sys = build_system(a, b, r);
  const ApproxQuadric f(sys.f, t), g(sys.g, t), h(sys.h, t);
  std::set<X8Point> found;

  auto confirm = [&](const X8Point& p) {
    if (on_system(sys, p)) found.insert(p);
  };
  auto exact_f = [&](const Rational& a0, const Rational& a1, const Rational& a2) {
    return twist_equations<Rational>(a, b, r, t, a0, a1, a2)[0];
  };

  // a2 != 0: the first equation is linear in a0 with nonzero slope.
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = 1; j < values.size(); ++j) {
      const double a1 = approx[i], a2 = approx[j];
      const double f0 = f(0.0, a1, a2);
      const double a0 = -f0 / (f(1.0, a1, a2) - f0);
      if (!g.near_zero(a0, a1, a2) || !h.near_zero(a0, a1, a2)) continue;
      const Rational x0 = exact_f(Rational(0), values[i], values[j]);
      const Rational x1 = exact_f(Rational(1), values[i], values[j]);
      confirm({t, -x0 / (x1 - x0), values[i], values[j]});
    }
  }
  // a2 == 0: the first equation pins a1, then a0 is enumerated.
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (exact_f(Rational(0), values[i], Rational(0)) != 0) continue;
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (!g.near_zero(approx[k], approx[i], 0.0) || !h.near_zero(approx[k], approx[i], 0.0)) continue;
      confirm({t, values[k], values[i], Rational(0)});
    }
  }
  return found;
}

}  // namespace twist8::acceptance
