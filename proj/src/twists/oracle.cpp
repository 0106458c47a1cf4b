#include "twist8/twists/oracle.hpp"

#include <optional>
#include <stdexcept>

#include "twist8/elliptic/torsion.hpp"
#include "twist8/modular/family.hpp"
#include "twist8/twists/ledger.hpp"
#include "twist8/twists/system.hpp"

namespace twist8 {

namespace {

// Elements of L[t, a0, a1, a2] as coefficient triples of 1, theta, theta^2.
using LPoly = std::array<Poly, 3>;

LPoly lmul(const LPoly& x, const LPoly& y, const Rational& a, const Rational& b) {
  std::array<Poly, 5> c;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) c[i + j] += x[i] * y[j];
  }
  // theta^4 = -a theta^2 - b theta, theta^3 = -a theta - b.
  c[2] += Poly(-a) * c[4];
  c[1] += Poly(-b) * c[4];
  c[1] += Poly(-a) * c[3];
  c[0] += Poly(-b) * c[3];
  return {c[0], c[1], c[2]};
}

LPoly lconst(const AlgebraElement& e) {
  const auto& c = e.coords();
  return {Poly(c[0]), Poly(c[1]), Poly(c[2])};
}

Poly negate_t(const Poly& p) { return p.substitute("t", -Poly::variable(system_variables(), "t")); }

// Finds c with x = c * y termwise, if any.
std::optional<Rational> proportional(const std::array<Poly, 3>& x, const std::array<Poly, 3>& y) {
  std::optional<Rational> c;
  for (std::size_t i = 0; i < 3 && !c; ++i) {
    if (y[i].is_zero()) continue;
    const Poly yi = y[i].with_variables(system_variables());
    const Poly xi = x[i].with_variables(system_variables());
    const auto& [e, coef] = *yi.terms().begin();
    auto it = xi.terms().find(e);
    if (it == xi.terms().end()) return std::nullopt;
    c = it->second / coef;
  }
  if (!c || *c == 0) return std::nullopt;
  for (std::size_t i = 0; i < 3; ++i) {
    if (x[i] != Poly(*c) * y[i]) return std::nullopt;
  }
  return c;
}

std::array<Poly, 3> reconstruct_algebra(const Rational& a, const Rational& b, int r) {
  const auto& v = system_variables();
  const Poly t = Poly::variable(v, "t");
  const ScalingLedger led = scaling_factors(a, b, r);
  const CuspData cusps = cusp_data(a, b);
  // t^2 - m t + l with m = -(2/3) theta.
  LPoly quad = lconst(cusps.l);
  const LPoly m = lconst(cusps.m);
  for (std::size_t i = 0; i < 3; ++i) quad[i] -= m[i] * t;
  quad[0] += t * t;
  const LPoly lhs = lmul(lconst(led.alpha), quad, a, b);
  const LPoly w{Poly::variable(v, "a0"), Poly::variable(v, "a1"), Poly::variable(v, "a2")};
  const LPoly sq = lmul(w, w, a, b);
  return {(lhs[2] - sq[2]).with_variables(v), (lhs[1] - sq[1]).with_variables(v), (lhs[0] - sq[0]).with_variables(v)};
}

std::array<Poly, 3> reconstruct_split(const Rational& a, const Rational& b, int r) {
  const auto roots = split_two_torsion(a, b);
  if (!roots) throw std::invalid_argument("split mode needs three rational 2-torsion points");
  const auto& v = system_variables();
  const Poly t = Poly::variable(v, "t");
  const ScalingLedger led = scaling_factors(a, b, r);
  const CuspData cusps = cusp_data(a, b);
  std::array<Poly, 3> e;
  std::vector<std::vector<Rational>> vander(3, std::vector<Rational>(3));
  for (std::size_t j = 0; j < 3; ++j) {
    const Rational& th = (*roots)[j];
    const auto& [mj, lj] = (*cusps.split)[j];
    const Poly w = Poly::variable(v, "a0") + Poly(th) * Poly::variable(v, "a1") + Poly(th * th) * Poly::variable(v, "a2");
    e[j] = Poly((*led.split)[j]) * (t * t - Poly(mj) * t + Poly(lj)) - w * w;
    vander[j] = {Rational(1), th, th * th};
  }
  // Invert the Vandermonde matrix column by column.
  std::array<Poly, 3> coeff;  // of 1, theta, theta^2
  for (std::size_t k = 0; k < 3; ++k) {
    std::vector<Rational> unit(3, Rational(0));
    unit[k] = 1;
    const auto col = solve_linear(vander, unit);
    if (!col) throw std::logic_error("repeated 2-torsion roots");
    for (std::size_t i = 0; i < 3; ++i) coeff[i] += Poly((*col)[i]) * e[k];
  }
  return {coeff[2].with_variables(v), coeff[1].with_variables(v), coeff[0].with_variables(v)};
}

}  // namespace

std::string to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::match:
      return "match";
    case OracleVerdict::match_after_t_negation:
      return "match after t->-t";
    case OracleVerdict::no_match:
      return "no match";
  }
  return "?";
}

OracleReport coefficient_comparison_oracle(const Rational& a, const Rational& b, int r, OracleMode mode) {
  OracleReport rep;
  rep.r = r;
  rep.mode = mode;
  rep.reconstructed = mode == OracleMode::algebra ? reconstruct_algebra(a, b, r) : reconstruct_split(a, b, r);
  const TwistSystem sys = build_system(a, b, r);
  const std::array<Poly, 3> printed{sys.f, sys.g, sys.h};
  const std::array<Poly, 3> flipped{negate_t(rep.reconstructed[0]), negate_t(rep.reconstructed[1]),
                                    negate_t(rep.reconstructed[2])};
  const char* names[3] = {"theta^2", "theta", "1"};
  if (auto c = proportional(rep.reconstructed, printed)) {
    rep.verdict = OracleVerdict::match;
    rep.factor = *c;
  } else if (auto c2 = proportional(flipped, printed)) {
    rep.verdict = OracleVerdict::match_after_t_negation;
    rep.factor = *c2;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    rep.details.push_back(std::string("coefficient of ") + names[i] + ": " + rep.reconstructed[i].to_string());
  }
  rep.details.push_back("verdict: " + to_string(rep.verdict) +
                        (rep.verdict == OracleVerdict::no_match ? "" : ", factor " + twist8::to_string(rep.factor)));
  return rep;
}

}  // namespace twist8
