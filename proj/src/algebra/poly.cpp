#include "twist8/algebra/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace twist8 {

namespace {

Exponents zero_exponents() { return Exponents{0, 0, 0, 0}; }

int total(const Exponents& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(zero_exponents(), c);
}

Poly Poly::variable(std::string_view name) { return variable({std::string(name)}, name); }

Poly Poly::variable(const std::vector<std::string>& vars, std::string_view name) {
  if (vars.size() > kMaxVars) throw std::invalid_argument("too many variables");
  Poly p;
  p.vars_ = vars;
  const int i = p.index_of(name);
  if (i < 0) throw std::invalid_argument("variable '" + std::string(name) + "' not in ring");
  Exponents e = zero_exponents();
  e[static_cast<std::size_t>(i)] = 1;
  p.terms_.emplace(e, Rational(1));
  return p;
}

Poly Poly::from_upoly(const UPoly& f, std::string_view var) {
  Poly p;
  p.vars_ = {std::string(var)};
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i) == 0) continue;
    Exponents e = zero_exponents();
    e[0] = i;
    p.terms_.emplace(e, f.coeff(i));
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == zero_exponents());
}

Rational Poly::constant_term() const {
  auto it = terms_.find(zero_exponents());
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::index_of(std::string_view var) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == var) return static_cast<int>(i);
  }
  return -1;
}

int Poly::degree_in(std::string_view var) const {
  const int i = index_of(var);
  if (i < 0 || terms_.empty()) return terms_.empty() ? -1 : 0;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
  return d;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

bool Poly::depends_on(std::string_view var) const { return degree_in(var) > 0; }

Poly Poly::with_variables(const std::vector<std::string>& vars) const {
  if (vars.size() > kMaxVars) throw std::invalid_argument("too many variables");
  Poly out;
  out.vars_ = vars;
  std::vector<int> map(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) map[i] = out.index_of(vars_[i]);
  for (const auto& [e, c] : terms_) {
    Exponents ne = zero_exponents();
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] < 0) throw std::invalid_argument("variable '" + vars_[i] + "' dropped from ring");
      ne[static_cast<std::size_t>(map[i])] = e[i];
    }
    out.terms_.emplace(ne, c);
  }
  return out;
}

void Poly::align_with(const Poly& o) {
  if (o.vars_ == vars_) return;
  std::vector<std::string> merged = vars_;
  for (const auto& v : o.vars_) {
    if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
  }
  if (merged != vars_) *this = with_variables(merged);
}

Poly& Poly::operator+=(const Poly& o) {
  align_with(o);
  const Poly rhs = o.with_variables(vars_);
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  Poly lhs = a;
  lhs.align_with(b);
  const Poly rhs = b.with_variables(lhs.vars_);
  Poly out;
  out.vars_ = lhs.vars_;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kMaxVars; ++i) e[i] = ea[i] + eb[i];
      Rational prod = ca * cb;
      auto [it, inserted] = out.terms_.emplace(e, prod);
      if (!inserted) {
        it->second += prod;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator-(Poly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  return (a - b).is_zero();
}

std::vector<Poly> Poly::coefficients_in(std::string_view var) const {
  const int i = index_of(var);
  if (i < 0) return {*this};
  const auto idx = static_cast<std::size_t>(i);
  std::vector<Poly> out(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1);
  for (auto& p : out) p.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ne[idx] = 0;
    out[static_cast<std::size_t>(e[idx])].terms_.emplace(ne, c);
  }
  return out;
}

Poly Poly::substitute(std::string_view var, const Poly& value) const {
  if (index_of(var) < 0) return *this;
  const auto coeffs = coefficients_in(var);
  Poly acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * value + *it;
  return acc;
}

Poly Poly::substitute(std::string_view var, const Rational& value) const {
  return substitute(var, Poly(value));
}

Rational Poly::evaluate(const std::map<std::string, Rational>& values) const {
  std::vector<const Rational*> vals(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it != values.end()) vals[i] = &it->second;
  }
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vals[i]) throw std::invalid_argument("no value for variable '" + vars_[i] + "'");
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), vals[i]->get_num_mpz_t(), static_cast<unsigned long>(e[i]));
      mpz_pow_ui(pw.get_den_mpz_t(), vals[i]->get_den_mpz_t(), static_cast<unsigned long>(e[i]));
      pw.canonicalize();
      term *= pw;
    }
    acc += term;
  }
  return acc;
}

UPoly Poly::to_upoly(std::string_view var) const {
  const int i = index_of(var);
  std::vector<Rational> c(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1, Rational(0));
  for (const auto& [e, coef] : terms_) {
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      if (static_cast<int>(k) != i && e[k] != 0) {
        throw std::invalid_argument("polynomial is not univariate in '" + std::string(var) + "'");
      }
    }
    c[i < 0 ? 0 : static_cast<std::size_t>(e[static_cast<std::size_t>(i)])] += coef;
  }
  return UPoly(std::move(c));
}

Poly Poly::derivative(std::string_view var) const {
  const int i = index_of(var);
  Poly out;
  out.vars_ = vars_;
  if (i < 0) return out;
  const auto idx = static_cast<std::size_t>(i);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents ne = e;
    ne[idx] -= 1;
    out.terms_.emplace(ne, c * e[idx]);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  // Graded order, highest total degree first, then lexicographic by variable.
  std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    const int tx = total(x.first), ty = total(y.first);
    if (tx != ty) return tx > ty;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool monomial = total(e) > 0;
    bool need_star = false;
    if (!monomial || mag != 1) {
      os << twist8::to_string(mag);
      need_star = true;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

Poly pow(const Poly& f, unsigned e) {
  Poly r(1L), base = f;
  while (e) {
    if (e & 1U) r *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return r;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::vector<std::string> vars) : s_(text), vars_(std::move(vars)) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    if (!vars_.empty()) p = p.with_variables(vars_);
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Poly expr() {
    Poly acc;
    bool neg = eat('-');
    if (!neg) eat('+');
    acc = neg ? -term() : term();
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }
  Poly term() {
    Poly acc = power();
    while (eat('*')) acc *= power();
    return acc;
  }
  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = pow(base, static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }
  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (s_[pos_] == '(') {
      ++pos_;
      Poly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (s_[pos_] == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      return Poly(parse_rational(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (std::find(seen_.begin(), seen_.end(), name) == seen_.end()) seen_.push_back(name);
      return Poly::variable(name);
    }
    fail(std::string("unexpected character '") + s_[pos_] + "'");
  }

  std::string_view s_;
  std::vector<std::string> vars_;
  std::vector<std::string> seen_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  return PolyParser(text, vars).parse();
}

}  // namespace twist8
