#include "twist8/algebra/rational.hpp"

#include <cctype>

namespace twist8 {

namespace {

bool valid_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_literal(num) || !valid_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Integer height(const Rational& x) {
  Integer n = abs(x.get_num());
  return n > x.get_den() ? n : Integer(x.get_den());
}

long valuation(const Integer& x, const Integer& p) {
  if (x == 0) throw std::domain_error("valuation of zero");
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rational& x, const Integer& p) {
  if (x == 0) throw std::domain_error("valuation of zero");
  return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

bool is_rational_square(const Rational& x) {
  if (x < 0) return false;
  return mpz_perfect_square_p(x.get_num_mpz_t()) != 0 && mpz_perfect_square_p(x.get_den_mpz_t()) != 0;
}

Rational rational_sqrt(const Rational& x) {
  if (!is_rational_square(x)) throw std::domain_error("not a rational square: " + to_string(x));
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  return Rational(n, d);
}

bool square_class_equal(const Rational& x, const Rational& y) {
  if (x == 0 || y == 0) throw std::domain_error("zero has no square class");
  // The reduced product is a square iff its numerator and denominator are
  // squares of integers, i.e. every prime exponent is even.
  return is_rational_square(Rational(x * y));
}

bool is_prime(const Integer& p) { return p > 1 && mpz_probab_prime_p(p.get_mpz_t(), 30) > 0; }

std::int64_t reduce_mod(const Rational& x, std::int64_t p) {
  const Integer modulus(static_cast<long>(p));
  Integer den = x.get_den() % modulus;
  if (den == 0) throw std::domain_error("denominator divisible by " + std::to_string(p));
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  Integer r = (x.get_num() * inv) % modulus;
  if (r < 0) r += modulus;
  return r.get_si();
}

}  // namespace twist8
