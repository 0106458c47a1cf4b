#pragma once

#include <array>
#include <string>
#include <vector>

#include "twist8/cocycle/lemmas.hpp"

namespace twist8 {

/// A signed permutation of the symbols sqrt(delta_1..3): the generator sends
/// sqrt(delta_j) to sign[j] * sqrt(delta_{image[j]}). Indices are 0-based.
struct SignedPermutation {
  std::array<int, 3> image{0, 1, 2};
  SignTriple sign{1, 1, 1};
  bool operator==(const SignedPermutation& o) const { return image == o.image && sign == o.sign; }
  std::string to_string() const;
};

struct SignActionRow {
  std::string name;
  ResidueMatrix s;
  /// Action on i = zeta^2: +1 when det s = 1 mod 4.
  int kappa = 1;
  /// Permutation of T1, T2, T3 (and of theta_1..3).
  std::array<int, 3> sigma{0, 1, 2};
  /// Images of 2P, 2Q, 2P+2Q as coordinate vectors mod 8.
  std::array<std::array<int, 2>, 3> half_images{};
  /// Action on the x-coordinates theta_j + i sqrt(delta_j): conjugated or not.
  SignedPermutation x_action;
  SignedPermutation sqrt_delta;
  /// s(sqrt(delta_{sigma^-1(k)})) / sqrt(delta_k).
  SignTriple ratios{1, 1, 1};
  /// pi(C_s) under the identification of H with M.
  SignTriple pi_cocycle{1, 1, 1};
  ResidueMatrix cocycle;
  bool matches_printed = false;
  std::vector<std::string> mismatches;
};

struct SignActionReport {
  std::vector<SignActionRow> rows;
  bool pass = false;
};

SignActionReport sign_action_tables();

}  // namespace twist8
