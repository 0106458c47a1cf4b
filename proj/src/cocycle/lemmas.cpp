#include "twist8/cocycle/lemmas.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace twist8 {

namespace {

using Q = ResidueMatrix::Quotient;

ResidueMatrix m8(int a, int b, int c, int d) { return ResidueMatrix(8, a, b, c, d); }
ResidueMatrix pm8(int a, int b, int c, int d) { return ResidueMatrix(8, a, b, c, d, Q::plus_minus_identity); }

std::string triple(const SignTriple& t) {
  std::ostringstream os;
  os << "(" << t[0] << "," << t[1] << "," << t[2] << ")";
  return os.str();
}

std::string vec(const std::array<int, 2>& v) {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")";
}

// The subgroup generated by S1, S2, S3 with the character of each element.
const std::map<ResidueMatrix, SignTriple>& h_table() {
  static const std::map<ResidueMatrix, SignTriple> table = [] {
    std::map<ResidueMatrix, SignTriple> t;
    const auto basis = generators::h_basis();
    const auto chars = generators::h_characters();
    for (int mask = 0; mask < 8; ++mask) {
      ResidueMatrix m = ResidueMatrix::identity(8, Q::plus_minus_identity);
      SignTriple c{1, 1, 1};
      for (int k = 0; k < 3; ++k) {
        if (!(mask & (1 << k))) continue;
        m = m * basis[static_cast<std::size_t>(k)];
        for (int j = 0; j < 3; ++j) c[static_cast<std::size_t>(j)] *= chars[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      }
      t.emplace(m.normalized(), c);
    }
    return t;
  }();
  return table;
}

GroupLemmaReport check_l3_1() {
  GroupLemmaReport rep{GroupLemma::L3_1, true, {}};
  // phi(p) = p' + 2q', phi(q) = 2p' + 3q' as columns.
  const ResidueMatrix phi(4, 1, 2, 2, 3);
  const std::array<ResidueMatrix, 3> v{ResidueMatrix(4, 3, 0, 0, 1), ResidueMatrix(4, 0, 1, 3, 0),
                                       ResidueMatrix(4, 1, 1, 0, 1)};
  // v1 fixes sqrt(Delta); v2 and v3 flip it, which acts as -1 on the twist.
  const std::array<int, 3> chi{1, -1, -1};
  // Printed images of p and q under v_j phi = phi v_j.
  const std::array<std::array<std::array<int, 2>, 2>, 3> printed{
      {{{{3, 2}, {2, 3}}}, {{{2, 1}, {1, 2}}}, {{{1, 2}, {3, 1}}}}};
  for (std::size_t j = 0; j < 3; ++j) {
    ResidueMatrix lhs = phi * v[j];
    ResidueMatrix rhs = v[j] * phi;
    if (chi[j] < 0) rhs = rhs.negated();
    for (int b = 0; b < 2; ++b) {
      const std::array<int, 2> e = b == 0 ? std::array<int, 2>{1, 0} : std::array<int, 2>{0, 1};
      const auto l = lhs.apply(e), r = rhs.apply(e);
      const bool ok = l == r && l == printed[j][static_cast<std::size_t>(b)];
      rep.pass = rep.pass && ok;
      rep.details.push_back("v" + std::to_string(j + 1) + (b == 0 ? " p" : " q") + ": phi v = " + vec(l) +
                            ", chi v phi = " + vec(r) + (ok ? "" : "  MISMATCH"));
    }
  }
  for (std::size_t j = 0; j < 3; ++j) {
    const ResidueMatrix lhs = phi * v[j];
    const ResidueMatrix rhs = chi[j] < 0 ? (v[j] * phi).negated() : v[j] * phi;
    const bool ok = lhs == rhs;
    rep.pass = rep.pass && ok;
    rep.details.push_back("v" + std::to_string(j + 1) + ": phi v = " + lhs.to_string() + (ok ? " = " : " != ") +
                          "chi v phi");
  }
  const bool det3 = phi.det() == 3;
  rep.pass = rep.pass && det3;
  rep.details.push_back("det phi = " + std::to_string(phi.det()) + " mod 4");
  return rep;
}

GroupLemmaReport check_l4_2() {
  GroupLemmaReport rep{GroupLemma::L4_2, true, {}};
  const auto gl = enumerate_gl2(8);
  rep.pass = gl.size() == 1536;
  rep.details.push_back("|GL2(Z/8)| = " + std::to_string(gl.size()));
  const ResidueMatrix phi = m8(5, 0, 0, 1);
  std::size_t commuting = 0, bad = 0;
  for (const auto& s : gl) {
    const bool commutes = s * phi == phi * s;
    const bool even_off = s.at(0, 1) % 2 == 0 && s.at(1, 0) % 2 == 0;
    if (commutes) ++commuting;
    if (commutes != even_off) ++bad;
  }
  rep.pass = rep.pass && bad == 0;
  rep.details.push_back("matrices commuting with diag(5,1): " + std::to_string(commuting) +
                        "; disagreements with the even off-diagonal criterion: " + std::to_string(bad));
  return rep;
}

GroupLemmaReport check_l4_3(GroupLemma id) {
  GroupLemmaReport rep{id, true, {}};
  const bool t3 = id == GroupLemma::L4_3_T3;
  const ResidueMatrix t = t3 ? m8(1, 0, 0, 5) : m8(1, 4, 4, 5);
  std::size_t count = 0, bad = 0;
  for (const auto& s : enumerate_gl2(8)) {
    const ResidueMatrix conj = s * t * s.inverse();
    if (!(conj == t || conj == t.negated())) continue;
    ++count;
    const auto sigma = two_torsion_permutation(s);
    const bool trivial = sigma == std::array<int, 3>{0, 1, 2};
    // Even permutations of three letters: identity and the two 3-cycles.
    const bool even = trivial || sigma == std::array<int, 3>{1, 2, 0} || sigma == std::array<int, 3>{2, 0, 1};
    if (t3 ? !trivial : !even) ++bad;
  }
  rep.pass = bad == 0 && count > 0;
  rep.details.push_back(std::string(t3 ? "T3" : "T4") + ": " + std::to_string(count) +
                        " elements normalise T up to sign; violations: " + std::to_string(bad));
  if (t3) {
    const ResidueMatrix a = m8(1, 0, 1, 1), b = m8(1, 1, 0, 1);
    const bool c1 = a.inverse() * t * a == m8(1, 0, 4, 5);
    const bool c2 = b.inverse() * t * b == m8(1, 4, 0, 5);
    rep.pass = rep.pass && c1 && c2;
    rep.details.push_back(std::string("T1 = A^-1 T3 A: ") + (c1 ? "yes" : "no"));
    rep.details.push_back(std::string("T2 = B^-1 T3 B: ") + (c2 ? "yes" : "no"));
  }
  return rep;
}

GroupLemmaReport check_l5_3() {
  GroupLemmaReport rep{GroupLemma::L5_3, true, {}};
  const std::array<ResidueMatrix, 4> printed{pm8(1, 4, 4, 1), pm8(1, 0, 0, 1), pm8(3, 4, 4, 3), pm8(1, 0, 4, 1)};
  const auto s = generators::s();
  for (std::size_t j = 0; j < 4; ++j) {
    const ResidueMatrix raw = s[j] * generators::v_prime() * s[j].inverse() * generators::v_prime().inverse();
    const bool ok = raw.with_quotient(Q::plus_minus_identity) == printed[j];
    rep.pass = rep.pass && ok;
    rep.details.push_back("C_s" + std::to_string(j + 1) + " = " + raw.to_string() + " ~ " + printed[j].to_string() +
                          (ok ? "" : "  MISMATCH"));
  }
  const ResidueMatrix vp = generators::v_prime();
  const bool det7 = vp.det() == 7;
  const bool lift = vp.reduce(4) == generators::v();
  rep.pass = rep.pass && det7 && lift;
  rep.details.push_back("det v' = " + std::to_string(vp.det()) + ", v' = v mod 4: " + (lift ? "yes" : "no"));
  return rep;
}

GroupLemmaReport check_l5_4() {
  GroupLemmaReport rep{GroupLemma::L5_4, true, {}};
  const auto basis = generators::h_basis();
  const auto chars = generators::h_characters();
  const auto s = generators::s();
  rep.pass = h_table().size() == 8;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto sigma = two_torsion_permutation(s[i]);
    std::array<int, 3> inv{};
    for (int k = 0; k < 3; ++k) inv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])] = k;
    for (std::size_t j = 0; j < 3; ++j) {
      const ResidueMatrix conj = (s[i] * basis[j] * s[i].inverse()).with_quotient(Q::plus_minus_identity);
      SignTriple lhs{};
      bool in_h = true;
      try {
        lhs = pi_of(conj);
      } catch (const std::invalid_argument&) {
        in_h = false;
      }
      SignTriple rhs{};
      for (std::size_t k = 0; k < 3; ++k) rhs[k] = chars[j][static_cast<std::size_t>(inv[k])];
      const bool ok = in_h && lhs == rhs;
      rep.pass = rep.pass && ok;
      rep.details.push_back("s" + std::to_string(i + 1) + " S" + std::to_string(j + 1) + ": pi = " +
                            (in_h ? triple(lhs) : std::string("not in H")) + ", chi o sigma^-1 = " + triple(rhs) +
                            (ok ? "" : "  MISMATCH"));
    }
  }
  return rep;
}

GroupLemmaReport check_exact_sequence() {
  GroupLemmaReport rep{GroupLemma::ExactSequence, true, {}};
  const auto hp = h_prime_elements();
  std::set<int> dets;
  std::vector<ResidueMatrix> kernel;
  for (const auto& m : hp) {
    dets.insert(m.det());
    if (m.det() == 1) kernel.push_back(m);
  }
  const bool surjective = dets == std::set<int>{1, 3, 5, 7};
  // H is the kernel of PSL2(Z/8) -> PSL2(Z/4): det 1 and +-I mod 4.
  std::set<ResidueMatrix> h_direct;
  for (const auto& m : enumerate_gl2(8)) {
    const ResidueMatrix r = m.reduce(4);
    if (m.det() == 1 && (r == ResidueMatrix::identity(4) || r == ResidueMatrix::identity(4).negated())) {
      h_direct.insert(m.with_quotient(Q::plus_minus_identity).normalized());
    }
  }
  std::set<ResidueMatrix> ker(kernel.begin(), kernel.end());
  std::set<ResidueMatrix> generated;
  for (const auto& [m, c] : h_table()) generated.insert(m.with_quotient(Q::plus_minus_identity).normalized());
  bool elementary = true;
  for (const auto& m : ker) {
    if (!((m * m) == ResidueMatrix::identity(8, Q::plus_minus_identity))) elementary = false;
    for (const auto& n : ker) {
      if (!((m * n) == (n * m))) elementary = false;
    }
  }
  const bool contains_vp = std::any_of(hp.begin(), hp.end(), [](const ResidueMatrix& m) {
    return m == generators::v_prime().with_quotient(Q::plus_minus_identity);
  });
  rep.pass = surjective && ker.size() == 8 && ker == h_direct && ker == generated && elementary && contains_vp;
  rep.details.push_back("|H'| = " + std::to_string(hp.size()));
  rep.details.push_back(std::string("det onto (Z/8)*: ") + (surjective ? "yes" : "no"));
  rep.details.push_back("|ker det| = " + std::to_string(ker.size()));
  rep.details.push_back(std::string("ker det = kernel of reduction in PSL2: ") + (ker == h_direct ? "yes" : "no"));
  rep.details.push_back(std::string("ker det = <S1,S2,S3>: ") + (ker == generated ? "yes" : "no"));
  rep.details.push_back(std::string("elementary abelian of exponent 2: ") + (elementary ? "yes" : "no"));
  rep.details.push_back(std::string("v' in H': ") + (contains_vp ? "yes" : "no"));
  return rep;
}

GroupLemmaReport check_h_prime_abelian() {
  GroupLemmaReport rep{GroupLemma::HPrimeAbelian, true, {}};
  const auto hp = h_prime_elements();
  std::size_t failures = 0;
  for (const auto& a : hp) {
    for (const auto& b : hp) {
      if (!((a * b) == (b * a))) ++failures;
    }
  }
  rep.pass = failures == 0 && !hp.empty();
  rep.details.push_back("|H'| = " + std::to_string(hp.size()) + ", non-commuting pairs: " + std::to_string(failures));
  return rep;
}

}  // namespace

namespace generators {

std::array<ResidueMatrix, 4> s() { return {m8(7, 0, 0, 1), m8(5, 0, 0, 1), m8(0, 1, -1, 0), m8(1, 1, 0, 1)}; }
ResidueMatrix v() { return ResidueMatrix(4, 1, 2, 2, 3); }
ResidueMatrix v_prime() { return m8(1, 2, 6, 3); }
std::array<ResidueMatrix, 3> h_basis() { return {pm8(1, 4, 4, 1), pm8(3, 4, 4, 3), pm8(1, 0, 4, 1)}; }
std::array<SignTriple, 3> h_characters() { return {SignTriple{-1, -1, 1}, SignTriple{1, 1, -1}, SignTriple{1, -1, 1}}; }

}  // namespace generators

const std::vector<GroupLemma>& all_group_lemmas() {
  static const std::vector<GroupLemma> ids{GroupLemma::L3_1,   GroupLemma::L4_2, GroupLemma::L4_3_T3,
                                           GroupLemma::L4_3_T4, GroupLemma::L5_3, GroupLemma::L5_4,
                                           GroupLemma::ExactSequence, GroupLemma::HPrimeAbelian};
  return ids;
}

std::string to_string(GroupLemma id) {
  switch (id) {
    case GroupLemma::L3_1:
      return "L3.1";
    case GroupLemma::L4_2:
      return "L4.2";
    case GroupLemma::L4_3_T3:
      return "L4.3-T3";
    case GroupLemma::L4_3_T4:
      return "L4.3-T4";
    case GroupLemma::L5_3:
      return "L5.3";
    case GroupLemma::L5_4:
      return "L5.4";
    case GroupLemma::ExactSequence:
      return "exact-sequence";
    case GroupLemma::HPrimeAbelian:
      return "H-prime-abelian";
  }
  return "?";
}

GroupLemma parse_group_lemma(const std::string& id) {
  for (auto g : all_group_lemmas()) {
    if (to_string(g) == id) return g;
  }
  throw std::invalid_argument("unknown id");
}

std::array<int, 3> two_torsion_permutation(const ResidueMatrix& s) {
  const ResidueMatrix r = s.reduce(2);
  const std::array<std::array<int, 2>, 3> t{{{1, 0}, {0, 1}, {1, 1}}};
  std::array<int, 3> sigma{};
  for (std::size_t j = 0; j < 3; ++j) {
    const auto img = r.apply(t[j]);
    sigma[j] = static_cast<int>(std::find(t.begin(), t.end(), img) - t.begin());
  }
  return sigma;
}

ResidueMatrix cocycle_value(const ResidueMatrix& s) {
  const ResidueMatrix vp = generators::v_prime();
  return (s * vp * s.inverse() * vp.inverse()).with_quotient(Q::plus_minus_identity).normalized();
}

SignTriple pi_of(const ResidueMatrix& h) {
  const auto& table = h_table();
  auto it = table.find(h.with_quotient(Q::plus_minus_identity).normalized());
  if (it == table.end()) throw std::invalid_argument("matrix not in H");
  return it->second;
}

std::vector<ResidueMatrix> h_prime_elements() {
  const ResidueMatrix id4 = ResidueMatrix::identity(4);
  const ResidueMatrix v = generators::v();
  std::set<ResidueMatrix> seen;
  for (const auto& m : enumerate_gl2(8)) {
    const ResidueMatrix r = m.reduce(4);
    if (r == id4 || r == id4.negated() || r == v || r == v.negated()) {
      seen.insert(m.with_quotient(Q::plus_minus_identity).normalized());
    }
  }
  return {seen.begin(), seen.end()};
}

GroupLemmaReport verify_group_lemma(GroupLemma id) {
  switch (id) {
    case GroupLemma::L3_1:
      return check_l3_1();
    case GroupLemma::L4_2:
      return check_l4_2();
    case GroupLemma::L4_3_T3:
    case GroupLemma::L4_3_T4:
      return check_l4_3(id);
    case GroupLemma::L5_3:
      return check_l5_3();
    case GroupLemma::L5_4:
      return check_l5_4();
    case GroupLemma::ExactSequence:
      return check_exact_sequence();
    case GroupLemma::HPrimeAbelian:
      return check_h_prime_abelian();
  }
  throw std::invalid_argument("unknown id");
}

}  // namespace twist8
