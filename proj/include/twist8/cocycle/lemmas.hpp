#pragma once

#include <array>
#include <string>
#include <vector>

#include "twist8/cocycle/residue_matrix.hpp"

namespace twist8 {

enum class GroupLemma { L3_1, L4_2, L4_3_T3, L4_3_T4, L5_3, L5_4, ExactSequence, HPrimeAbelian };

const std::vector<GroupLemma>& all_group_lemmas();
std::string to_string(GroupLemma id);
/// Accepts "L3.1", "L4.2", "L4.3-T3", "L4.3-T4", "L5.3", "L5.4",
/// "exact-sequence", "H-prime-abelian"; throws std::invalid_argument("unknown id").
GroupLemma parse_group_lemma(const std::string& id);

struct GroupLemmaReport {
  GroupLemma id;
  bool pass = false;
  std::vector<std::string> details;
};

GroupLemmaReport verify_group_lemma(GroupLemma id);

/// A +-1 triple indexed by the nonzero 2-torsion points T1, T2, T3.
using SignTriple = std::array<int, 3>;

namespace generators {
// GL2(Z/8) generators s1..s4.
std::array<ResidueMatrix, 4> s();
// v (mod 4) and its lift v' (mod 8).
ResidueMatrix v();
ResidueMatrix v_prime();
// Generators S1, S2, S3 of H (mod +-I) and their printed characters.
std::array<ResidueMatrix, 3> h_basis();
std::array<SignTriple, 3> h_characters();
}  // namespace generators

/// Permutation of {0,1,2} induced on T1 = (1,0), T2 = (0,1), T3 = (1,1) by
/// the reduction mod 2: sigma[j] = k when s(T_j) = T_k.
std::array<int, 3> two_torsion_permutation(const ResidueMatrix& s);

/// C_s = s v' s^{-1} v'^{-1}, normalized modulo +-I.
ResidueMatrix cocycle_value(const ResidueMatrix& s);

/// pi: H -> M on an element of H (mod +-I); throws std::invalid_argument when
/// the matrix is not in the group generated by S1, S2, S3.
SignTriple pi_of(const ResidueMatrix& h);

/// Elements of H' = {M : M mod 4 in {+-I, +-v}} modulo +-I.
std::vector<ResidueMatrix> h_prime_elements();

}  // namespace twist8
