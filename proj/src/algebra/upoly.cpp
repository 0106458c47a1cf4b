#include "twist8/algebra/upoly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace twist8 {

namespace {

const Rational& zero_rational() {
  static const Rational z(0);
  return z;
}

}  // namespace

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

UPoly UPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero_rational();
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UPoly::leading() const {
  if (coeffs_.empty()) return zero_rational();
  return coeffs_.back();
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  UPoly r = *this;
  const Rational inv = 1 / leading();
  r *= inv;
  return r;
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += UPoly(*it);
  }
  return acc;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UPoly operator-(UPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

std::string UPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeff(i);
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << twist8::to_string(mag);
      if (i > 0) os << "*";
    }
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const Rational inv_lead = 1 / b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] * inv_lead;
    quo[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(j);
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UPoly square_free_part(const UPoly& f) {
  if (f.degree() <= 0) return f;
  return exact_div(f, gcd(f, f.derivative())).monic();
}

UPoly pow(const UPoly& f, unsigned e) {
  UPoly r(1L), base = f;
  while (e) {
    if (e & 1U) r *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return r;
}

std::vector<Integer> primitive_integer_coeffs(const UPoly& f) {
  Integer l(1);
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(f.coeffs().size());
  Integer g(0);
  for (const auto& c : f.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (g != 0 && g != 1) {
    for (auto& v : out) v /= g;
  }
  if (!out.empty() && out.back() < 0) {
    for (auto& v : out) v = -v;
  }
  return out;
}

bool root_order_less(const Rational& x, const Rational& y) {
  const Rational ax = abs(x), ay = abs(y);
  if (ax != ay) return ax < ay;
  return x > y;
}

namespace {

using i64 = std::int64_t;

i64 mulmod(i64 a, i64 b, i64 p) { return static_cast<i64>((static_cast<__int128>(a) * b) % p); }

i64 powmod(i64 a, i64 e, i64 p) {
  i64 r = 1 % p;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::vector<i64> reduce_coeffs(const std::vector<Integer>& c, i64 p) {
  std::vector<i64> out(c.size());
  const Integer P(static_cast<long>(p));
  for (std::size_t i = 0; i < c.size(); ++i) {
    Integer r = c[i] % P;
    if (r < 0) r += P;
    out[i] = r.get_si();
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Remainder of a by b over F_p (b nonzero, coefficient vectors trimmed).
std::vector<i64> mod_rem(std::vector<i64> a, const std::vector<i64>& b, i64 p) {
  const i64 inv = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const i64 c = mulmod(a.back(), inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = (a[shift + j] - mulmod(c, b[j], p)) % p;
      if (a[shift + j] < 0) a[shift + j] += p;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

bool squarefree_mod(const std::vector<i64>& f, i64 p) {
  std::vector<i64> d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mulmod(f[i], static_cast<i64>(i) % p, p));
  while (!d.empty() && d.back() == 0) d.pop_back();
  if (d.empty()) return false;
  std::vector<i64> a = f, b = d;
  while (!b.empty()) {
    auto r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

i64 eval_mod(const std::vector<i64>& f, i64 x, i64 p) {
  i64 acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (mulmod(acc, x, p) + *it) % p;
  return acc;
}

Integer eval_int(const std::vector<Integer>& f, const Integer& x) {
  Integer acc(0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool small_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& f) {
  if (f.is_zero()) throw std::domain_error("identically zero");
  std::vector<Rational> roots;
  if (f.degree() == 0) return roots;
  UPoly g = square_free_part(f);
  if (g.coeff(0) == 0) {
    roots.emplace_back(0);
    g = exact_div(g, UPoly::x());
  }
  if (g.degree() >= 1) {
    const std::vector<Integer> c = primitive_integer_coeffs(g);
    const Integer& lead = c.back();
    // Any root num/den has den | lead and num | c[0]; lead*root is an
    // integer bounded by |lead*c[0]|.
    const Integer bound = 2 * abs(lead) * abs(c.front()) + 1;
    i64 p = 3;
    std::vector<i64> fp;
    for (;; p += 2) {
      if (!small_prime(p)) continue;
      if (lead % Integer(static_cast<long>(p)) == 0) continue;
      fp = reduce_coeffs(c, p);
      if (squarefree_mod(fp, p)) break;
    }
    std::vector<i64> base_roots;
    for (i64 x = 0; x < p; ++x) {
      if (eval_mod(fp, x, p) == 0) base_roots.push_back(x);
    }
    std::vector<Integer> dc;
    for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * static_cast<long>(i));
    for (i64 r0 : base_roots) {
      Integer modulus(static_cast<long>(p));
      Integer r(static_cast<long>(r0));
      while (modulus <= bound) {
        modulus *= modulus;
        Integer num = eval_int(c, r) % modulus;
        Integer den = eval_int(dc, r) % modulus;
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0) break;
        r = (r - num * inv) % modulus;
        if (r < 0) r += modulus;
      }
      Integer y = (lead * r) % modulus;
      if (y < 0) y += modulus;
      if (2 * y > modulus) y -= modulus;
      Rational cand(y, lead);
      cand.canonicalize();
      if (g(cand) == 0) roots.push_back(cand);
    }
  }
  std::sort(roots.begin(), roots.end(), root_order_less);
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace twist8
