#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "twist8/io/json_io.hpp"

using namespace twist8;

TEST_CASE("rationals") {
  CHECK(encode(make_rational(-81, 8)) == "-81/8");
  CHECK(decode_rational(Json("3/6")) == make_rational(1, 2));
  CHECK(decode_rational(Json(12)) == 12);
  CHECK_THROWS_AS(decode_rational(Json(1.5)), JsonFormatError);
  CHECK_THROWS_AS(decode_rational(Json("1/0")), JsonFormatError);
}

TEST_CASE("curves") {
  const Curve c(1, -1, 1, -2, 0);
  CHECK(decode_curve(encode(c)) == c);
  CHECK(decode_curve(Json::parse(R"({"a": "-1", "b": 0})")) == Curve::short_weierstrass(-1, 0));
  CHECK(decode_curve(Json::parse(R"({"a4": -17, "a6": -33, "a2": 1})")) == Curve(0, 1, 0, -17, -33));
  CHECK_THROWS_AS(decode_curve(Json::parse(R"({"a4": 0, "a6": 0})")), JsonFormatError);
  CHECK_THROWS_AS(decode_curve(Json::parse("[1, 2]")), JsonFormatError);
}

TEST_CASE("points and systems") {
  const X8Point p{make_rational(-1, 2), make_rational(243, 32), make_rational(-81, 8), Rational(0)};
  CHECK(decode_point(encode(p)) == p);
  const auto sys = build_system(make_rational(27, 8), make_rational(27, 8), 5);
  const auto back = decode_system(encode(sys));
  CHECK(back.r == 5);
  CHECK(back.f == sys.f);
  CHECK(back.g == sys.g);
  CHECK(back.h == sys.h);
  CHECK(on_system(back, p));
  CHECK_THROWS_AS(decode_point(Json::parse(R"({"t": "1"})")), JsonFormatError);
}

TEST_CASE("congruence reports") {
  const auto rep = verify_congruence(Curve(0, 1, 0, -17, -33), Curve(0, -8, 0, -333056, 59636736), 5, 31);
  const auto back = decode_report(Json::parse(encode(rep).dump()));
  CHECK(back.e == rep.e);
  CHECK(back.f == rep.f);
  CHECK(back.pass == rep.pass);
  CHECK(back.exceptions == rep.exceptions);
  CHECK(back.witness == rep.witness);
  REQUIRE(back.rows.size() == rep.rows.size());
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    CHECK(back.rows[i].e == rep.rows[i].e);
    CHECK(back.rows[i].f == rep.rows[i].f);
    CHECK(back.rows[i].status == rep.rows[i].status);
  }
  REQUIRE(back.valuation_notes.size() == 1);
  CHECK(back.valuation_notes[0].v_f == 5);
}

TEST_CASE("cocycle artifacts") {
  const ResidueMatrix m(8, 1, 2, 3, 5, ResidueMatrix::Quotient::plus_minus_identity);
  CHECK(decode_matrix(encode(m)) == m);
  const auto rep = verify_group_lemma(GroupLemma::L5_3);
  const auto back = decode_lemma_report(encode(rep));
  CHECK(back.id == rep.id);
  CHECK(back.pass == rep.pass);
  CHECK(back.details == rep.details);
  CHECK(encode(sign_action_tables())["rows"].size() == 4);
}
