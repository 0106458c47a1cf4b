#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "twist8/elliptic/curve.hpp"
#include "twist8/elliptic/group_law.hpp"
#include "twist8/elliptic/reduction.hpp"
#include "twist8/elliptic/torsion.hpp"

using namespace twist8;

namespace {
// Coefficients from the constant term upward.
UPoly up(std::initializer_list<Rational> c) { return UPoly(std::vector<Rational>(c)); }
}  // namespace

namespace {
Curve c96a2() { return Curve(0, 1, 0, -17, -33); }
Curve c1056d2() { return Curve(0, -8, 0, -333056, 59636736); }
Curve c99a1() { return Curve(1, -1, 1, -2, 0); }
}  // namespace

TEST_CASE("invariants of 99a1") {
  const Curve e = c99a1();
  CHECK(e.c4() == 81);
  CHECK(e.c6() == 135);
  CHECK(e.discriminant() == 297);
  CHECK(e.j_invariant() == make_rational(19683, 11));
}

TEST_CASE("singular models are rejected") {
  CHECK_THROWS_AS(Curve::short_weierstrass(-3, 2), std::domain_error);
  CHECK_THROWS_AS(Curve(0, 0, 0, 0, 0), std::domain_error);
  CHECK(discriminant_d(-3, 2) == 0);
  CHECK(discriminant_d(-1, 0) == 4);
}

TEST_CASE("isomorphism and twisting") {
  const Curve e = c96a2();
  CHECK(is_q_isomorphic(e, short_model(e)));
  CHECK(is_q_isomorphic(e, scale_model(e, Rational(6))));
  const Curve tw = quadratic_twist(e, Rational(2));
  CHECK(tw.j_invariant() == e.j_invariant());
  CHECK_FALSE(is_q_isomorphic(e, tw));
  CHECK_FALSE(is_q_isomorphic(e, c1056d2()));
  const Curve moved = change_coordinates(e, Rational(2), Rational(1), Rational(-3), Rational(5));
  CHECK(is_q_isomorphic(e, moved));
  CHECK(moved.j_invariant() == e.j_invariant());
}

TEST_CASE("traces of 96a2 at small primes") {
  // Classical values from point counting by hand at 5 and 7.
  CHECK(trace_of_frobenius(c96a2(), 5) == 2);
  CHECK(trace_of_frobenius(c96a2(), 7) == -4);
  CHECK(trace_of_frobenius(c96a2(), 31) == 4);
}

TEST_CASE("reduction types") {
  CHECK(count_points(c96a2(), 3).type == ReductionType::split);
  CHECK(count_points(c96a2(), 3).ap == 1);
  CHECK(count_points(c96a2(), 2).type == ReductionType::additive);
  CHECK(count_points(c96a2(), 2).ap == 0);
  CHECK(count_points(c99a1(), 11).type == ReductionType::nonsplit);
  CHECK(count_points(c99a1(), 11).ap == -1);
  CHECK(count_points(c99a1(), 5).type == ReductionType::good);
  CHECK(parse_reduction_type(to_string(ReductionType::nonsplit)) == ReductionType::nonsplit);
}

TEST_CASE("minimal models descend at 2 and 3") {
  const Curve big = scale_model(c99a1(), Rational(6));
  CHECK(valuation(minimal_model_at(big, 2).discriminant(), Integer(2)) == 0);
  CHECK(valuation(minimal_model_at(big, 3).discriminant(), Integer(3)) == 3);
  CHECK(count_points(minimal_model_at(big, 5), 5).ap == count_points(c99a1(), 5).ap);
}

TEST_CASE("group law on y^2 = x^3 - x") {
  const auto m = rational_model(Curve::short_weierstrass(-1, 0));
  const auto p = ECPoint<Rational>::affine(0, 0);
  CHECK(on_curve(m, p));
  CHECK(ec_order(m, p, 10) == 2);
  const auto q = ECPoint<Rational>::affine(-1, 0);
  const auto s = ec_add(m, p, q);
  CHECK(s.x == 1);
  CHECK(s.y == 0);
  CHECK(ec_mul(m, s, 2).infinity);
}

TEST_CASE("division polynomials and four-torsion of y^2 = x^3 - x") {
  const auto psi = division_polynomials(-1, 0, 4);
  REQUIRE(psi.size() >= 5);
  CHECK(psi[3].poly == up({-1, 0, -6, 0, 3}));
  const auto data = four_torsion_data(-1, 0);
  CHECK(data.sextic == up({1, 0, -5, 0, -5, 0, 1}));
  REQUIRE(data.delta.has_value());
  CHECK(*data.delta == std::array<Rational, 3>{1, -2, -2});
  REQUIRE(split_two_torsion(-1, 0).has_value());
  CHECK_FALSE(split_two_torsion(1, 1).has_value());
}
