#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "twist8/congruence/report.hpp"
#include "twist8/search/sweep.hpp"
#include "twist8/twists/recover.hpp"

using namespace twist8;

namespace {
Curve c96a2() { return Curve(0, 1, 0, -17, -33); }
Curve c1056d2() { return Curve(0, -8, 0, -333056, 59636736); }
Curve c99a1() { return Curve(1, -1, 1, -2, 0); }
Curve c1683b1() { return Curve(0, 0, 0, Rational(-975159243), Rational("11681563877190")); }
}  // namespace

TEST_CASE("primes") {
  CHECK(primes_up_to(31) == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31});
  CHECK(primes_up_to(1).empty());
}

TEST_CASE("first trace table") {
  const auto rep = verify_congruence(c96a2(), c1056d2(), 5, 31);
  CHECK(rep.pass);
  CHECK(rep.exceptions == std::vector<std::int64_t>{2, 3, 11});
  CHECK(rep.witness == std::optional<std::int64_t>(7));
  CHECK(rep.j_distinct);
  std::vector<std::int64_t> ap_f;
  for (const auto& row : rep.rows) ap_f.push_back(row.f.ap);
  CHECK(ap_f == std::vector<std::int64_t>{0, 1, 2, 4, -1, -2, 2, 4, 0, -6, 4});
}

TEST_CASE("second trace table") {
  const auto rep = verify_congruence(c99a1(), c1683b1(), 3, 31);
  CHECK(rep.pass);
  CHECK(rep.exceptions == std::vector<std::int64_t>{3, 11, 17});
  CHECK(local_data(c1683b1(), 2).ap == -1);
  CHECK(local_data(c1683b1(), 5).ap == 4);
}

TEST_CASE("a quadratic twist is not congruent") {
  const auto rep = verify_congruence(c96a2(), quadratic_twist(c96a2(), Rational(2)), 1, 31);
  CHECK_FALSE(rep.pass);
}

TEST_CASE("congruence is reflexive and symmetric") {
  const auto self = verify_congruence(c99a1(), c99a1(), 1, 50);
  CHECK(self.pass);
  CHECK_FALSE(non_isogeny_witness(c99a1(), c99a1(), 50).has_value());
  const auto fwd = verify_congruence(c96a2(), c1056d2(), 5, 50);
  const auto back = verify_congruence(c1056d2(), c96a2(), 5, 50);
  CHECK(fwd.pass == back.pass);
  CHECK(fwd.exceptions == back.exceptions);
}

TEST_CASE("valuations at common multiplicative primes") {
  const auto notes = valuation_report(c96a2(), c1056d2());
  REQUIRE(notes.size() == 1);
  CHECK(notes[0].p == 3);
  CHECK(notes[0].v_e == 1);
  CHECK(notes[0].v_f == 5);
  const auto notes2 = valuation_report(c99a1(), c1683b1());
  REQUIRE(notes2.size() == 1);
  CHECK(notes2[0].p == 11);
  CHECK(notes2[0].v_e == 1);
  CHECK(notes2[0].v_f == 3);
  CHECK(notes2[0].e_type == ReductionType::nonsplit);
}

TEST_CASE("csv output") {
  const auto rows = ap_table(c96a2(), c1056d2(), {5, 7});
  CHECK(to_csv(rows).rfind("p,apE,apF,apE_mod8,apF_mod8,status\n", 0) == 0);
}

TEST_CASE("points found by the search give congruent pairs") {
  struct Fiber {
    Rational a, b;
    int r;
    Rational t;
  };
  const std::vector<Fiber> fibers{{9, -18, 3, -1}, {make_rational(27, 8), make_rational(27, 8), 5, make_rational(-1, 2)}};
  for (const auto& fb : fibers) {
    SearchConfig cfg;
    cfg.mode = SearchMode::fiber;
    cfg.a = fb.a;
    cfg.b = fb.b;
    cfg.r = fb.r;
    cfg.t = fb.t;
    const auto hits = sweep(cfg);
    REQUIRE_FALSE(hits.empty());
    for (const auto& hit : hits) {
      const Curve e = Curve::short_weierstrass(hit.a, hit.b);
      const Curve f = recover_curve(hit.a, hit.b, fb.r, hit.point);
      CHECK(verify_congruence(e, f, fb.r, 200).pass);
    }
  }
}
