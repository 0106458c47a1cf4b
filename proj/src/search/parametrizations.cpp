#include "twist8/search/parametrizations.hpp"

#include <stdexcept>

namespace twist8 {

namespace {

template <class R>
R ipow(const R& x, int n) {
  R acc(1);
  for (int i = 0; i < n; ++i) acc = acc * x;
  return acc;
}

template <class R>
R k(long n, long d = 1) {
  return R(make_rational(n, d));
}

template <class R>
struct SectionData {
  int r;
  R a, b, t, a0, a1, a2;
};

template <class R>
SectionData<R> section_formulas(int l, const R& s) {
  switch (l) {
    case 5: {
      const R a = k<R>(-27) * ipow(s, 4) + k<R>(324) * ipow(s, 3) - k<R>(378) * ipow(s, 2) - k<R>(324) * s - k<R>(27);
      const R b = k<R>(54) * ipow(s, 6) - k<R>(972) * ipow(s, 5) + k<R>(4050) * ipow(s, 4) + k<R>(4050) * ipow(s, 2) +
                  k<R>(972) * s + k<R>(54);
      const R t = s * s + k<R>(1);
      const R a0 = k<R>(-1944) * s * (ipow(s, 3) - k<R>(11) * s * s + k<R>(7) * s + k<R>(1)) *
                   (ipow(s, 3) - k<R>(7) * s * s - k<R>(11) * s - k<R>(1));
      const R a1 = k<R>(324) * s * (s * s - k<R>(12) * s - k<R>(1)) * (s * s + k<R>(1));
      const R a2 = k<R>(108) * s * (s * s - k<R>(6) * s - k<R>(1));
      return {5, a, b, t, a0, a1, a2};
    }
    case 3: {
      return {3,
              k<R>(18) * s - k<R>(27),
              k<R>(9) * s * s - k<R>(54) * s + k<R>(54),
              k<R>(1) - s,
              k<R>(36) * s * s - k<R>(126) * s + k<R>(108),
              k<R>(15) * s - k<R>(18),
              k<R>(3) * s - k<R>(6)};
    }
    case 7: {
      const R a = k<R>(-27) * ipow(s, 8) + k<R>(324) * ipow(s, 7) - k<R>(1134) * ipow(s, 6) + k<R>(1512) * ipow(s, 5) -
                  k<R>(945) * ipow(s, 4) + k<R>(378) * ipow(s, 2) - k<R>(108) * s - k<R>(27);
      const R b = k<R>(54) * ipow(s, 12) - k<R>(972) * ipow(s, 11) + k<R>(6318) * ipow(s, 10) -
                  k<R>(19116) * ipow(s, 9) + k<R>(30780) * ipow(s, 8) - k<R>(26244) * ipow(s, 7) +
                  k<R>(14742) * ipow(s, 6) - k<R>(11988) * ipow(s, 5) + k<R>(9396) * ipow(s, 4) -
                  k<R>(2484) * ipow(s, 3) - k<R>(810) * ipow(s, 2) + k<R>(324) * s + k<R>(54);
      const R den = s * s - s + k<R>(1);
      const R t = (ipow(s, 6) - k<R>(7) * ipow(s, 5) - k<R>(14) * ipow(s, 4) + k<R>(53) * ipow(s, 3) -
                   k<R>(34) * s * s + s + k<R>(1)) /
                  den;
      const R a0 = k<R>(12) * (-ipow(s, 8) + k<R>(15) * ipow(s, 7) - k<R>(72) * ipow(s, 6) + k<R>(125) * ipow(s, 5) -
                               k<R>(113) * ipow(s, 4) + k<R>(48) * ipow(s, 3) + k<R>(5) * s * s - k<R>(7) * s - k<R>(1));
      const R a1 = (k<R>(2) * ipow(s, 6) - k<R>(26) * ipow(s, 5) + k<R>(80) * ipow(s, 4) - k<R>(50) * ipow(s, 3) -
                    k<R>(20) * s * s + k<R>(14) * s + k<R>(2)) /
                   den;
      return {7, a, b, t, a0, a1, k<R>(2, 3)};
    }
    default:
      throw std::invalid_argument("l must be 3, 5 or 7");
  }
}

template <class R>
SectionData<R> genus_zero_formulas(GenusZeroFamily family, const R& s) {
  switch (family) {
    case GenusZeroFamily::P73: {
      const R u = s * s - k<R>(12) * s + k<R>(12);
      const R v = s * s - k<R>(12);
      const R w = s * s - k<R>(4) * s + k<R>(12);
      const R a = k<R>(27, 8) * u * u / (v * v);
      return {5,
              a,
              a,
              k<R>(-1, 2) * u / v,
              k<R>(-243, 32) * ipow(u, 3) * w / ipow(v, 4),
              k<R>(81, 8) * u * u * w / ipow(v, 3),
              k<R>(0)};
    }
    case GenusZeroFamily::P74: {
      const R n1 = s * s - k<R>(2) * s - k<R>(15, 8);
      const R n2 = s * s + k<R>(1, 8);
      const R d1 = s * s - s + k<R>(11, 8);
      const R d2 = s * s + s + k<R>(3, 8);
      const R d3 = s * s + k<R>(2) * s - k<R>(1, 8);
      const R m = s * s - k<R>(1, 2) * s - k<R>(3, 8);
      const R a = k<R>(-135, 4) * n1 * n2 / (d1 * d2 * d3);
      const R a0 = k<R>(-135) * (s * s - k<R>(2) * s + k<R>(21, 8)) * m * n2 * n2 *
                   (s * s + k<R>(1, 2) * s + k<R>(5, 8)) * (s * s + k<R>(6, 5) * s + k<R>(17, 40)) /
                   (d1 * d1 * d2 * d2 * ipow(d3, 3));
      const R a2 = k<R>(6) * m * m * (s + k<R>(1, 8)) / (d1 * d2 * d3);
      return {3, a, a, k<R>(1, 2) * n1 * n2 / (d1 * d2), a0, k<R>(0), a2};
    }
    case GenusZeroFamily::P75:
      return {7, k<R>(-135, 32), k<R>(-135, 32), k<R>(0), k<R>(75, 32), k<R>(5, 4), k<R>(-1, 3)};
  }
  throw std::invalid_argument("unknown family");
}

template <class R>
bool satisfies(const SectionData<R>& d) {
  const auto eq = twist_equations<R>(d.a, d.b, d.r, d.t, d.a0, d.a1, d.a2);
  return eq[0] == R(0) && eq[1] == R(0) && eq[2] == R(0);
}

// Evaluates rational formulas, mapping a division by zero to a domain error.
template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const std::domain_error&) {
    throw;
  } catch (const std::exception&) {
    throw std::domain_error("degenerate parameter");
  }
}

}  // namespace

// ---------------------------------------------------------------------------

Rational param_71_printed_a(const Rational& p, const Rational& q) {
  const Rational h1 = q * q * q * q * q * q - make_rational(3, 2) * q * q * q * q * q + 3 * q * q * q * q +
                      make_rational(1, 2) * q * q * q * p - make_rational(9, 2) * q * q * q -
                      make_rational(3, 2) * q * q * p + make_rational(1, 2) * q * q + 3 * q * p - q -
                      make_rational(1, 2) * p * p + make_rational(1, 2);
  const Rational h2 = q * q * q * q * q * q - 3 * q * q * q * q * q + 3 * q * q * q * q + q * q * q * p - 9 * q * q * q -
                      3 * q * q * p + 6 * q * p - 2 * q + 2;
  const Rational e1 = q * q * q * q + 3 * q * q - 2 * p;
  const Rational e2 = q * q * q * q * q * q + 3 * q * q * q * q + q * q - p * p - 1;
  const Rational den = (q - 1) * e1 * e2 * e2 * h2;
  if (den == 0) throw std::domain_error("degenerate parameter");
  const Rational num = -8 * (q + 1) * (q * q + 2) * (q * q + 2) * h1 * h1 * h1;
  return num / den;
}

Rational param_71_printed_t(const Rational& p, const Rational& q) {
  // h3 and h5 are displayed identical to h1 and h2.
  const Rational h3 = q * q * q * q * q * q - make_rational(3, 2) * q * q * q * q * q + 3 * q * q * q * q +
                      make_rational(1, 2) * q * q * q * p - make_rational(9, 2) * q * q * q -
                      make_rational(3, 2) * q * q * p + make_rational(1, 2) * q * q + 3 * q * p - q -
                      make_rational(1, 2) * p * p + make_rational(1, 2);
  const Rational h5 = q * q * q * q * q * q - 3 * q * q * q * q * q + 3 * q * q * q * q + q * q * q * p - 9 * q * q * q -
                      3 * q * q * p + 6 * q * p - 2 * q + 2;
  Rational q2 = q * q;
  Rational q4 = q2 * q2;
  Rational q8 = q4 * q4;
  const Rational h4 = q8 * q2 - 2 * q8 * q + 10 * q8 + 2 * q4 * q2 * q * p - 8 * q4 * q2 * q - 8 * q4 * q2 * p +
                      26 * q4 * q2 + 12 * q4 * q * p - 6 * q4 * q + q4 * p * p - 32 * q4 * p + 16 * q4 -
                      6 * q2 * q * p * p + 6 * q2 * q * p - 4 * q2 * q + 11 * q2 * p * p - 16 * q2 * p + q2 + 4 * q * p -
                      4 * q + 2 * p * p + 2;
  const Rational e1 = q4 + 3 * q2 - 2 * p;
  const Rational e2 = q4 * q2 + 3 * q4 + q2 - p * p - 1;
  const Rational den = 3 * (q - 1) * e1 * e2 * h5;
  if (den == 0) throw std::domain_error("degenerate parameter");
  return -((q2 + 2) * h3 * h4) / den;
}

Param71Result param_71(const Rational& p, const Rational& q) {
  if (q == 1) throw std::domain_error("degenerate parameter");
  Param71Result out;
  out.printed_a = param_71_printed_a(p, q);
  out.printed_t = param_71_printed_t(p, q);
  if (out.printed_a == 0 || out.printed_a == make_rational(-27, 4)) throw std::domain_error("degenerate parameter");

  // Conic w^2 = hp(q, a2) with hp = H2 a2^2 + H1 a2 + H0, through (w*, a2*).
  const Rational q2 = q * q, q3 = q2 * q, q4 = q2 * q2, q5 = q4 * q, q6 = q3 * q3;
  const Rational hp2 = q6 + 3 * q4 + q2 - 1;
  const Rational hp1 = 3 * q5 + 9 * q3 + 2 * q;
  const Rational w_star = (3 * q - make_rational(3, 2) * q2 + make_rational(1, 2) * q3) / (q - 1);
  const Rational a2_star = -1 / (q - 1);
  // Line w = m a2 + c through the point, with slope m = -p.
  const Rational m = -p;
  const Rational c = w_star - m * a2_star;
  const Rational c2 = m * m - hp2;
  if (c2 == 0) throw std::domain_error("degenerate parameter");
  const Rational c1 = 2 * m * c - hp1;
  const Rational b2 = -c1 / c2 - a2_star;  // second intersection
  const Rational w = m * b2 + c;
  const Rational b1 = q * b2;

  const Rational big_a = -b1 * b1 - 2 * b1 + b2 * b2 - 1;
  const Rational big_b = -2 * b1 * b1 * b1 * b1 - 3 * b1 * b1 * b1 - 4 * b1 * b1 * b2 * b2 - b1 * b1 -
                         10 * b1 * b2 * b2 + 2 * b2 * b2 * b2 * b2 - 2 * b2 * b2;
  if (big_a == 0 || b2 == 0) throw std::domain_error("degenerate parameter");
  const Rational b0 = (-b2 * b2 * b2 * w - big_b / 2) / big_a;
  const Rational a = 2 * b0 + b1 * b1 + 2 * b2 * b2;
  const Rational big_t = (-2 * a * b1 - a + 2 * b0 * b1) / (2 * b2);
  out.a = a;
  out.point = {-big_t / (3 * b2), b0 / (3 * b2), b1 / (3 * b2), 1 / (3 * b2)};
  if (!on_system(build_system(a, a, 1), out.point)) throw std::logic_error("point not on system");
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(GenusZeroFamily f) {
  switch (f) {
    case GenusZeroFamily::P73:
      return "P73";
    case GenusZeroFamily::P74:
      return "P74";
    case GenusZeroFamily::P75:
      return "P75";
  }
  return "?";
}

GenusZeroFamily parse_genus_zero_family(const std::string& s) {
  for (auto f : {GenusZeroFamily::P73, GenusZeroFamily::P74, GenusZeroFamily::P75}) {
    if (to_string(f) == s) return f;
  }
  throw std::invalid_argument("unknown family '" + s + "'");
}

GenusZeroPoint param_genus0(GenusZeroFamily family, const Rational& s) {
  const auto d = guarded([&] { return genus_zero_formulas<Rational>(family, s); });
  if (discriminant_d(d.a, d.b) == 0) throw std::domain_error("degenerate parameter");
  GenusZeroPoint out{family, d.r, d.a, Curve::short_weierstrass(d.a, d.b), {d.t, d.a0, d.a1, d.a2}};
  if (!on_system(build_system(d.a, d.b, d.r), out.point)) throw std::logic_error("point not on system");
  return out;
}

IsogenySection isogeny_section(int l, const Rational& s) {
  const auto d = section_formulas<Rational>(l, s);
  if (discriminant_d(d.a, d.b) == 0) throw std::domain_error("singular E_s");
  IsogenySection out{l, d.r, d.a, d.b, Curve::short_weierstrass(d.a, d.b), {d.t, d.a0, d.a1, d.a2}};
  if (!on_system(build_system(d.a, d.b, d.r), out.point)) throw std::logic_error("point not on system");
  return out;
}

Rational x05_isogenous_j(const Rational& s) {
  const Rational n = s * s * s * s + 228 * s * s * s + 494 * s * s - 228 * s + 1;
  const Rational d0 = s * s - 11 * s - 1;
  const Rational den = s * d0 * d0 * d0 * d0 * d0;
  if (den == 0) throw std::domain_error("cusp");
  return n * n * n / den;
}

bool isogeny_section_identity(int l) {
  const RationalFunction s(Poly::variable("s"));
  return satisfies(section_formulas<RationalFunction>(l, s));
}

bool genus_zero_identity(GenusZeroFamily family) {
  const RationalFunction s(Poly::variable("s"));
  return satisfies(genus_zero_formulas<RationalFunction>(family, s));
}

}  // namespace twist8
