#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "twist8/elliptic/reduction.hpp"
#include "twist8/elliptic/torsion.hpp"
#include "twist8/modular/family.hpp"
#include "twist8/modular/universal.hpp"

using namespace twist8;

TEST_CASE("universal curve at u = 1") {
  const auto x = x4_universal(Rational(1));
  CHECK(x.p.x == -57);
  CHECK(x.p.y == 540);
  const auto m = rational_model(x.curve);
  CHECK(on_curve(m, x.p));
  CHECK(ec_order(m, x.p, 8) == 4);
}

TEST_CASE("cusps of X(4) are refused") {
  CHECK(is_x4_cusp(Rational(0)));
  CHECK_THROWS_AS(x4_universal(Rational(0)), std::domain_error);
}

TEST_CASE("half point quartic") {
  CHECK(half_point_quartic_identity());
  CHECK(half_point_quartic_check(make_rational(3, 7)));
}

TEST_CASE("cusp data of a split curve") {
  const auto cd = cusp_data(-1, 0);
  REQUIRE(cd.split.has_value());
  CHECK(cd.field->dimension() == 3);
}

TEST_CASE("level-4 family preserves traces mod 4") {
  const Rational a(-1), b(0);
  const Curve e = Curve::short_weierstrass(a, b);
  for (int power : {1, 3}) {
    const Curve f = family_x4(a, b, make_rational(1, 3), power);
    CHECK(square_class_equal(e.discriminant(), f.discriminant()));
    for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23}) {
      const auto le = count_points(e, p), lf = count_points(f, p);
      if (le.type != ReductionType::good || lf.type != ReductionType::good) continue;
      CHECK((le.ap - lf.ap) % 4 == 0);
    }
  }
}

TEST_CASE("phi commutes with the generators") { CHECK(check_lemma_3_1()); }
