#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "twist8/algebra/poly.hpp"
#include "twist8/algebra/quotient_algebra.hpp"
#include "twist8/algebra/rational.hpp"
#include "twist8/algebra/rational_function.hpp"
#include "twist8/algebra/resultant.hpp"
#include "twist8/algebra/upoly.hpp"

using namespace twist8;

namespace {
// Coefficients from the constant term upward.
UPoly up(std::initializer_list<Rational> c) { return UPoly(std::vector<Rational>(c)); }
}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-81/8") == make_rational(-81, 8));
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(parse_rational("11681563877190") == Rational("11681563877190"));
  CHECK(to_string(make_rational(-81, 8)) == "-81/8");
  CHECK(to_string(Rational(7)) == "7");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational(""));
}

TEST_CASE("heights, valuations and square classes") {
  CHECK(height(make_rational(-27, 8)) == 27);
  CHECK(height(Rational(0)) == 1);
  CHECK(valuation(make_rational(9, 8), Integer(2)) == -3);
  CHECK(valuation(Integer(1056), Integer(2)) == 5);
  CHECK(is_rational_square(make_rational(49, 4)));
  CHECK_FALSE(is_rational_square(Rational(-4)));
  CHECK(square_class_equal(Rational(2), Rational(8)));
  CHECK_FALSE(square_class_equal(Rational(2), Rational(3)));
  CHECK(rational_sqrt(make_rational(9, 16)) == make_rational(3, 4));
  CHECK(is_prime(Integer(31)));
  CHECK_FALSE(is_prime(Integer(1683)));
  CHECK(reduce_mod(make_rational(1, 2), 7) == 4);
}

TEST_CASE("univariate division, gcd and rational roots") {
  // (x - 1)(x + 2)(2x - 3)
  const UPoly f = up({-1, 1}) * up({2, 1}) * up({-3, 2});
  const auto roots = rational_roots(f);
  REQUIRE(roots.size() == 3);
  CHECK(std::find(roots.begin(), roots.end(), make_rational(3, 2)) != roots.end());
  CHECK(std::find(roots.begin(), roots.end(), Rational(-2)) != roots.end());
  CHECK(gcd(f, up({-1, 1}) * up({5, 1})) == up({-1, 1}));
  const auto [q, r] = divmod(f, up({2, 1}));
  CHECK(r.is_zero());
  CHECK(q * up({2, 1}) == f);
  CHECK_THROWS_AS(exact_div(f, up({7, 1})), std::domain_error);
  CHECK_THROWS_AS(rational_roots(UPoly()), std::domain_error);
  CHECK(rational_roots(up({1, 0, 1})).empty());
  CHECK(square_free_part(f * f) == f.monic());
}

TEST_CASE("a root far from the origin") {
  const UPoly g = up({-123456789, 1}) * up({1, 0, 1});
  const auto roots = rational_roots(g);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == 123456789);
}

TEST_CASE("multivariate polynomials") {
  const std::vector<std::string> vars{"x", "y"};
  const Poly x = Poly::variable(vars, "x"), y = Poly::variable(vars, "y");
  const Poly f = x * x - Poly(2) * x * y + y * y;
  CHECK(f == pow(x - y, 2));
  CHECK(f.degree_in("x") == 2);
  CHECK(f.total_degree() == 2);
  CHECK(f.evaluate({{"x", Rational(3)}, {"y", Rational(1)}}) == 4);
  CHECK(f.substitute("y", Rational(0)) == x * x);
  CHECK(parse_poly(f.to_string(), vars) == f);
  CHECK(parse_poly("2*x^2*y - 3/4", vars).evaluate({{"x", Rational(1)}, {"y", Rational(2)}}) == make_rational(13, 4));
  CHECK_THROWS(parse_poly("x^^2", vars));
}

TEST_CASE("resultant of two conics") {
  // x^2 + y^2 - 1 and x - y: eliminating x gives 2y^2 - 1 up to sign.
  const std::vector<std::string> vars{"x", "y"};
  const Poly f = parse_poly("x^2 + y^2 - 1", vars), g = parse_poly("x - y", vars);
  const Poly r = resultant(f, g, "x");
  CHECK_FALSE(r.depends_on("x"));
  const UPoly u = r.to_upoly("y");
  CHECK(u.monic() == up({make_rational(-1, 2), 0, 1}));
}

TEST_CASE("quotient algebra: Gaussian rationals") {
  const auto qi = QuotientAlgebra::simple("i", {Rational(-1), Rational(0)});
  const auto i = qi->gen("i");
  CHECK(qi->dimension() == 2);
  CHECK(i * i == qi->constant(-1));
  const auto z = qi->constant(3) + i * qi->constant(4);
  CHECK(z * z.inverse() == qi->one());
  CHECK(pow(i, 4) == qi->one());
  CHECK_FALSE((i * i).as_rational() == std::nullopt);
}

TEST_CASE("quotient algebra: zero divisors are not inverted") {
  // Q[e]/(e^2 - 1) is Q x Q; e - 1 is a zero divisor.
  const auto alg = QuotientAlgebra::simple("e", {Rational(1), Rational(0)});
  const auto e = alg->gen("e");
  CHECK_FALSE((e - alg->one()).try_inverse().has_value());
  CHECK_THROWS_AS((e - alg->one()).inverse(), NotUnitError);
}

TEST_CASE("rational functions") {
  const std::vector<std::string> vars{"u"};
  const Poly u = Poly::variable(vars, "u");
  const RationalFunction f(u, u + Poly(1));
  const RationalFunction g(Poly(1), u + Poly(1));
  CHECK(f + g == RationalFunction(Poly(1), Poly(1)));
  CHECK((f * g).evaluate({{"u", Rational(1)}}) == make_rational(1, 4));
}
