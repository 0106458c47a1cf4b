#include "twist8/elliptic/curve.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace twist8 {

namespace {

Rational rpow(const Rational& x, unsigned e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), e);
  return r;
}

void append_term(std::ostringstream& os, const Rational& c, const std::string& mono, bool& first) {
  if (c == 0) return;
  const Rational mag = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  first = false;
  if (mono.empty()) {
    os << to_string(mag);
  } else if (mag == 1) {
    os << mono;
  } else {
    os << to_string(mag) << "*" << mono;
  }
}

}  // namespace

Invariants invariants(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4,
                      const Rational& a6) {
  Invariants v;
  v.b2 = a1 * a1 + 4 * a2;
  v.b4 = 2 * a4 + a1 * a3;
  v.b6 = a3 * a3 + 4 * a6;
  v.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  v.c4 = v.b2 * v.b2 - 24 * v.b4;
  v.c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
  v.disc = -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 + 9 * v.b2 * v.b4 * v.b6;
  if (v.disc == 0) throw std::domain_error("singular model");
  v.j = v.c4 * v.c4 * v.c4 / v.disc;
  return v;
}

Curve::Curve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
  inv_ = twist8::invariants(a1_, a2_, a3_, a4_, a6_);
}

Curve Curve::short_weierstrass(const Rational& a, const Rational& b) {
  return Curve(Rational(0), Rational(0), Rational(0), a, b);
}

bool Curve::is_integral() const {
  for (const Rational* c : {&a1_, &a2_, &a3_, &a4_, &a6_}) {
    if (c->get_den() != 1) return false;
  }
  return true;
}

std::string Curve::to_string() const {
  std::ostringstream os;
  os << "y^2";
  bool first = false;
  append_term(os, a1_, "x*y", first);
  append_term(os, a3_, "y", first);
  os << " = x^3";
  append_term(os, a2_, "x^2", first);
  append_term(os, a4_, "x", first);
  append_term(os, a6_, "", first);
  return os.str();
}

std::pair<Rational, Rational> short_form(const Curve& c) { return {-27 * c.c4(), -54 * c.c6()}; }

Rational discriminant_d(const Rational& a, const Rational& b) { return -4 * a * a * a - 27 * b * b; }

bool is_q_isomorphic(const Curve& x, const Curve& y) {
  if (x.j_invariant() != y.j_invariant()) return false;
  if (x.c4() == 0) {
    // j = 0: need c6' / c6 to be a sixth power.
    const Rational k = y.c6() / x.c6();
    if (k <= 0) return false;
    Integer n = k.get_num(), d = k.get_den();
    return mpz_root(n.get_mpz_t(), n.get_mpz_t(), 6) != 0 && mpz_root(d.get_mpz_t(), d.get_mpz_t(), 6) != 0;
  }
  if (x.c6() == 0) {
    const Rational k = y.c4() / x.c4();
    if (k <= 0) return false;
    Integer n = k.get_num(), d = k.get_den();
    return mpz_root(n.get_mpz_t(), n.get_mpz_t(), 4) != 0 && mpz_root(d.get_mpz_t(), d.get_mpz_t(), 4) != 0;
  }
  // With equal j, u^2 = (c6'/c6) / (c4'/c4) is forced; it must be a square.
  return is_rational_square((y.c6() * x.c4()) / (x.c6() * y.c4()));
}

Curve quadratic_twist(const Curve& c, const Rational& d) {
  if (d == 0) throw std::invalid_argument("twist by zero");
  Rational a = c.a4(), b = c.a6();
  if (!c.is_short()) std::tie(a, b) = short_form(c);
  return Curve::short_weierstrass(a * d * d, b * d * d * d);
}

Curve scale_model(const Curve& c, const Rational& u) {
  if (u == 0) throw std::invalid_argument("scale by zero");
  return Curve(u * c.a1(), rpow(u, 2) * c.a2(), rpow(u, 3) * c.a3(), rpow(u, 4) * c.a4(), rpow(u, 6) * c.a6());
}

Curve change_coordinates(const Curve& c, const Rational& u, const Rational& r, const Rational& s,
                         const Rational& t) {
  if (u == 0) throw std::invalid_argument("scale by zero");
  const Rational &a1 = c.a1(), &a2 = c.a2(), &a3 = c.a3(), &a4 = c.a4(), &a6 = c.a6();
  const Rational n1 = a1 + 2 * s;
  const Rational n2 = a2 - s * a1 + 3 * r - s * s;
  const Rational n3 = a3 + r * a1 + 2 * t;
  const Rational n4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
  const Rational n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
  return Curve(n1 / u, n2 / rpow(u, 2), n3 / rpow(u, 3), n4 / rpow(u, 4), n6 / rpow(u, 6));
}

Curve integral_model(const Curve& c) {
  // For each small prime in a denominator take the least e with
  // e*i >= -v_p(a_i). Whatever is left after trial division is folded into u
  // whole, which keeps the model integral without a full factorisation.
  std::map<Integer, long> need;
  Integer leftover = 1;
  const Rational* coeffs[] = {&c.a1(), &c.a2(), &c.a3(), &c.a4(), &c.a6()};
  const int weights[] = {1, 2, 3, 4, 6};
  for (int k = 0; k < 5; ++k) {
    Integer den = coeffs[k]->get_den();
    for (unsigned long p = 2; p < 100000 && den != 1; ++p) {
      if (mpz_divisible_ui_p(den.get_mpz_t(), p) == 0) continue;
      long v = 0;
      while (mpz_divisible_ui_p(den.get_mpz_t(), p) != 0) {
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p);
        ++v;
      }
      const long e = (v + weights[k] - 1) / weights[k];
      auto& slot = need[Integer(p)];
      slot = std::max(slot, e);
    }
    if (den != 1) mpz_lcm(leftover.get_mpz_t(), leftover.get_mpz_t(), den.get_mpz_t());
  }
  Integer u = leftover;
  for (const auto& [p, e] : need) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    u *= pe;
  }
  return u == 1 ? c : scale_model(c, Rational(u));
}

}  // namespace twist8
