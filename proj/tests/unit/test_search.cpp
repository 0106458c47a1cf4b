#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <random>

#include "twist8/acceptance/oracles.hpp"
#include "twist8/search/fiber.hpp"
#include "twist8/search/parametrizations.hpp"
#include "twist8/search/sweep.hpp"

using namespace twist8;

TEST_CASE("rationals of bounded height") {
  const auto v = rationals_of_height(2);
  CHECK(v == std::vector<Rational>{0, 1, -1, 2, -2, make_rational(1, 2), make_rational(-1, 2)});
  CHECK(rationals_of_height(0) == rationals_of_height(1));
}

TEST_CASE("pair representatives") {
  const X8Point p{Rational(1), Rational(0), Rational(-3), Rational(2)};
  CHECK(canonical_pair_representative(p) == p.partner());
  CHECK(canonical_pair_representative(p.partner()) == p.partner());
}

TEST_CASE("fiber with two points") {
  const auto pts = solve_fiber(9, -18, 3, Rational(-1));
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].partner() == pts[1]);
  CHECK(std::abs(pts[0].a1.get_d()) == doctest::Approx(12));
}

TEST_CASE("fiber through a0 = a2 = 0 with fractional coordinates") {
  const Rational a = make_rational(27, 8);
  const auto pts = solve_fiber(a, a, 5, make_rational(-1, 2));
  REQUIRE(pts.size() == 2);
  const X8Point want{make_rational(-1, 2), make_rational(243, 32), make_rational(-81, 8), Rational(0)};
  CHECK((pts[0] == want || pts[1] == want));
}

TEST_CASE("empty fiber") {
  const auto res = solve_fiber_detailed(1, 1, 1, Rational(17));
  CHECK(res.points.empty());
  CHECK_FALSE(res.degenerate);
}

TEST_CASE("solver agrees with the grid oracle on a small batch") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 4; ++i) {
    const auto sec = isogeny_section(3, acceptance::random_rational(rng, 3));
    const auto grid = acceptance::grid_fiber(sec.a, sec.b, sec.r, sec.point.t, 12);
    const auto solved = solve_fiber(sec.a, sec.b, sec.r, sec.point.t);
    for (const auto& p : grid) CHECK(std::find(solved.begin(), solved.end(), p) != solved.end());
  }
}

TEST_CASE("fiber sweep finds the section point") {
  SearchConfig cfg;
  cfg.mode = SearchMode::fiber;
  cfg.a = 9;
  cfg.b = -18;
  cfg.r = 3;
  cfg.t = Rational(-1);
  const auto hits = sweep(cfg);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].partner_on_system);
  CHECK(hits[0].point.a1 == 12);
}

TEST_CASE("isogeny sections") {
  for (int l : {3, 5, 7}) CHECK(isogeny_section_identity(l));
  const auto s5 = isogeny_section(5, Rational(1));
  CHECK(s5.a == -432);
  CHECK(s5.b == 8208);
  CHECK(s5.point == X8Point{Rational(2), Rational(-69984), Rational(-7776), Rational(-648)});
  CHECK(on_system(build_system(s5.a, s5.b, s5.r), s5.point));
}

TEST_CASE("genus zero families") {
  CHECK(genus_zero_identity(GenusZeroFamily::P73));
  CHECK(genus_zero_identity(GenusZeroFamily::P75));
  const auto g = param_genus0(GenusZeroFamily::P73, Rational(2));
  CHECK(g.a == make_rational(27, 8));
  CHECK(on_system(build_system(g.a, g.a, g.r), g.point));
  CHECK(parse_genus_zero_family("P75") == GenusZeroFamily::P75);
}

TEST_CASE("parametrisation of the r = 1 surface") {
  const auto out = param_71(Rational(2), Rational(3));
  CHECK(on_system(build_system(out.a, out.a, 1), out.point));
  CHECK(out.a == out.printed_a);
  // The closed form printed for t has the opposite sign.
  CHECK(out.point.t == -out.printed_t);
}
