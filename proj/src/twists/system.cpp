#include "twist8/twists/system.hpp"

#include <stdexcept>
#include <tuple>


namespace twist8 {

bool X8Point::operator<(const X8Point& o) const {
  auto key = [](const X8Point& p) { return std::tie(p.t, p.a0, p.a1, p.a2); };
  return key(*this) < key(o);
}

std::string X8Point::to_string() const {
  return "(" + twist8::to_string(t) + ", " + twist8::to_string(a0) + ", " + twist8::to_string(a1) + ", " +
         twist8::to_string(a2) + ")";
}

const std::vector<std::string>& system_variables() {
  static const std::vector<std::string> vars{"t", "a0", "a1", "a2"};
  return vars;
}

int forgetful_power(int r) {
  if (r == 1 || r == 5) return 1;
  if (r == 3 || r == 7) return 3;
  throw std::invalid_argument("r must be 1, 3, 5 or 7");
}

TwistSystem build_system(const Rational& a, const Rational& b, int r) {
  const auto& v = system_variables();
  const auto eq = twist_equations<Poly>(Poly(a), Poly(b), r, Poly::variable(v, "t"), Poly::variable(v, "a0"),
                                        Poly::variable(v, "a1"), Poly::variable(v, "a2"));
  TwistSystem sys{r, a, b, eq[0].with_variables(v), eq[1].with_variables(v), eq[2].with_variables(v),
                  forgetful_power(r)};
  return sys;
}

std::array<Rational, 3> evaluate(const TwistSystem& sys, const X8Point& p) {
  return twist_equations<Rational>(sys.a, sys.b, sys.r, p.t, p.a0, p.a1, p.a2);
}

bool on_system(const TwistSystem& sys, const X8Point& p) {
  const auto v = evaluate(sys, p);
  return v[0] == 0 && v[1] == 0 && v[2] == 0;
}

}  // namespace twist8
