#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "twist8/elliptic/curve.hpp"
#include "twist8/twists/ledger.hpp"
#include "twist8/twists/oracle.hpp"
#include "twist8/twists/recover.hpp"
#include "twist8/twists/system.hpp"

using namespace twist8;

TEST_CASE("system variables and powers") {
  CHECK(system_variables() == std::vector<std::string>{"t", "a0", "a1", "a2"});
  CHECK(forgetful_power(1) == 1);
  CHECK(forgetful_power(5) == 1);
  CHECK(forgetful_power(3) == 3);
  CHECK(forgetful_power(7) == 3);
  CHECK_THROWS_AS(build_system(1, 1, 9), std::invalid_argument);
  CHECK_THROWS_AS(build_system(1, 1, 2), std::invalid_argument);
}

TEST_CASE("singular parameters still give a system") {
  const auto sys = build_system(-27, 54, 3);
  CHECK(sys.r == 3);
  CHECK_FALSE(sys.f.is_zero());
}

TEST_CASE("known points lie on their systems") {
  // The isogeny section for l = 3 at s = 2.
  CHECK(on_system(build_system(9, -18, 3), {Rational(-1), Rational(0), Rational(12), Rational(0)}));
  CHECK(on_system(build_system(9, -18, 3), {Rational(-1), Rational(0), Rational(-12), Rational(0)}));
  // Power 5, b = a = 27/8.
  const X8Point p{make_rational(-1, 2), make_rational(243, 32), make_rational(-81, 8), Rational(0)};
  CHECK(on_system(build_system(make_rational(27, 8), make_rational(27, 8), 5), p));
  CHECK(on_system(build_system(make_rational(27, 8), make_rational(27, 8), 5), p.partner()));
  CHECK_FALSE(on_system(build_system(make_rational(27, 8), make_rational(27, 8), 1), p));
}

TEST_CASE("the power 7 point of the example pair") {
  const Rational a = make_rational(-135, 32);
  const X8Point p{Rational(0), make_rational(75, 32), make_rational(5, 4), make_rational(-1, 3)};
  const auto sys = build_system(a, a, 7);
  CHECK(evaluate(sys, p) == std::array<Rational, 3>{0, 0, 0});
  const Curve f = recover_curve(a, a, 7, p);
  CHECK(is_q_isomorphic(f, Curve::short_weierstrass(7931250, Rational(-8519850000L))));
}

TEST_CASE("recover_curve refuses points off the system") {
  CHECK_THROWS_AS(recover_curve(1, 1, 1, {Rational(0), Rational(0), Rational(0), Rational(0)}), std::invalid_argument);
}

TEST_CASE("scaling factors") {
  const auto l1 = scaling_factors(-1, 0, 1);
  CHECK(l1.alpha == l1.field->one());
  const auto l5 = scaling_factors(-1, 0, 5);
  CHECK(l5.alpha == l5.field->constant(4));
  const auto l7 = scaling_factors(-1, 0, 7);
  REQUIRE(l7.split.has_value());
  const auto l3 = scaling_factors(-1, 0, 3);
  CHECK(l3.consistent);
  // alpha_3 * delta = D.
  CHECK(l3.alpha * delta_element(l3.field, -1) == l3.field->constant(discriminant_d(-1, 0)));
}

TEST_CASE("coefficient comparison oracle") {
  for (int r : {1, 3, 5, 7}) {
    const auto alg = coefficient_comparison_oracle(-7, 6, r, OracleMode::algebra);
    const auto split = coefficient_comparison_oracle(-7, 6, r, OracleMode::split);
    CHECK(alg.verdict == OracleVerdict::match_after_t_negation);
    CHECK(alg.reconstructed == split.reconstructed);
    CHECK(alg.factor == (r == 3 ? Rational(1) : Rational(-1)));
  }
}
