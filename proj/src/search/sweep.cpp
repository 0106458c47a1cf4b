#include "twist8/search/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "twist8/elliptic/curve.hpp"

namespace twist8 {

std::vector<Rational> rationals_of_height(long h) {
  h = std::max(h, 1L);
  std::vector<Rational> out{Rational(0)};
  for (long ht = 1; ht <= h; ++ht) {
    // Fractions n/d with max(|n|, d) == ht.
    for (long d = 1; d <= ht; ++d) {
      for (long n = (d == ht ? 1 : ht); n <= ht; ++n) {
        if (std::gcd(n, d) != 1) continue;
        if (std::max(n, d) != ht) continue;
        out.push_back(make_rational(n, d));
        out.push_back(make_rational(-n, d));
      }
    }
  }
  return out;
}

X8Point canonical_pair_representative(const X8Point& p) {
  for (const Rational* c : {&p.a0, &p.a1, &p.a2}) {
    if (*c > 0) return p;
    if (*c < 0) return p.partner();
  }
  return p;
}

namespace {

void scan_fiber(const Rational& a, const Rational& b, int r, const Rational& t, std::vector<SweepHit>& out) {
  std::set<X8Point> reps;
  for (const auto& p : solve_fiber(a, b, r, t)) reps.insert(canonical_pair_representative(p));
  const TwistSystem sys = build_system(a, b, r);
  for (const auto& p : reps) out.push_back({a, b, p, on_system(sys, p.partner())});
}

}  // namespace

std::vector<SweepHit> sweep(const SearchConfig& config) {
  std::vector<SweepHit> hits;
  switch (config.mode) {
    case SearchMode::fiber:
      if (!config.t) throw std::invalid_argument("fiber mode needs t");
      scan_fiber(config.a, config.b, config.r, *config.t, hits);
      break;
    case SearchMode::sweep:
      for (const Rational& t : rationals_of_height(config.height)) scan_fiber(config.a, config.b, config.r, t, hits);
      break;
    case SearchMode::surface: {
      const std::vector<Rational> as =
          config.a_values.empty() ? rationals_of_height(config.height) : config.a_values;
      const std::vector<Rational> ts = rationals_of_height(config.height);
      for (const Rational& a : as) {
        if (discriminant_d(a, a) == 0) continue;
        for (const Rational& t : ts) scan_fiber(a, a, config.r, t, hits);
      }
      break;
    }
  }
  return hits;
}

}  // namespace twist8
