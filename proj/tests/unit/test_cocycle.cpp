#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "twist8/cocycle/lemmas.hpp"
#include "twist8/cocycle/residue_matrix.hpp"
#include "twist8/cocycle/sign_action.hpp"

using namespace twist8;

TEST_CASE("residue matrices") {
  const ResidueMatrix m(8, 1, 2, 3, 5);
  CHECK(m.det() == 7);
  CHECK(m.invertible());
  CHECK(m * m.inverse() == ResidueMatrix::identity(8));
  CHECK(m.reduce(4) == ResidueMatrix(4, 1, 2, 3, 1));
  CHECK_FALSE(ResidueMatrix(8, 2, 0, 0, 1).invertible());
  const auto pm = ResidueMatrix::Quotient::plus_minus_identity;
  CHECK(ResidueMatrix(8, 1, 2, 3, 5, pm) == ResidueMatrix(8, 7, 6, 5, 3, pm));
}

TEST_CASE("GL2(Z/8) and GL2(Z/4) sizes") {
  CHECK(enumerate_gl2(4).size() == 96);
  CHECK(enumerate_gl2(8).size() == 1536);
}

TEST_CASE("lemma ids round trip") {
  for (auto id : all_group_lemmas()) CHECK(parse_group_lemma(to_string(id)) == id);
  CHECK_THROWS_AS(parse_group_lemma("L9.9"), std::invalid_argument);
}

TEST_CASE("every group lemma verifies") {
  for (auto id : all_group_lemmas()) {
    const auto rep = verify_group_lemma(id);
    INFO(to_string(id));
    CHECK(rep.pass);
  }
}

TEST_CASE("H' has 32 elements and the generators act as printed") {
  CHECK(h_prime_elements().size() == 32);
  const auto tables = sign_action_tables();
  CHECK(tables.pass);
  REQUIRE(tables.rows.size() == 4);
  CHECK(tables.rows[0].pi_cocycle == SignTriple{-1, -1, 1});
  CHECK(tables.rows[1].pi_cocycle == SignTriple{1, 1, 1});
  CHECK(tables.rows[2].pi_cocycle == SignTriple{1, 1, -1});
  CHECK(tables.rows[3].pi_cocycle == SignTriple{1, -1, 1});
}
