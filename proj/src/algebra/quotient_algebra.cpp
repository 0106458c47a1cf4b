#include "twist8/algebra/quotient_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace twist8 {

QuotientAlgebra::QuotientAlgebra(std::vector<Relation> relations) : relations_(std::move(relations)) {
  for (const auto& r : relations_) {
    if (r.degree < 1) throw std::invalid_argument("relation degree must be positive");
    names_.push_back(r.generator);
    degrees_.push_back(r.degree);
    dim_ *= static_cast<std::size_t>(r.degree);
  }
  const std::size_t n = relations_.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (auto& [mono, c] : relations_[k].reduction) {
      if (mono.size() > k + 1) throw std::invalid_argument("relation uses a later generator");
      mono.resize(n, 0);
      if (mono[k] >= degrees_[k]) throw std::invalid_argument("relation is not reducing");
    }
  }
  table_.resize(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    const auto ei = basis_exponents(i);
    for (std::size_t j = i; j < dim_; ++j) {
      const auto ej = basis_exponents(j);
      std::vector<int> e(n);
      for (std::size_t k = 0; k < n; ++k) e[k] = ei[k] + ej[k];
      table_[i * dim_ + j] = reduce_monomial(e);
      table_[j * dim_ + i] = table_[i * dim_ + j];
    }
  }
  memo_.clear();
}

std::shared_ptr<const QuotientAlgebra> QuotientAlgebra::create(std::vector<Relation> relations) {
  return std::shared_ptr<const QuotientAlgebra>(new QuotientAlgebra(std::move(relations)));
}

std::shared_ptr<const QuotientAlgebra> QuotientAlgebra::simple(const std::string& generator,
                                                              const std::vector<Rational>& lower) {
  Relation r{generator, static_cast<int>(lower.size()), {}};
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i] != 0) r.reduction.push_back({{static_cast<int>(i)}, lower[i]});
  }
  return create({r});
}

std::vector<int> QuotientAlgebra::basis_exponents(std::size_t i) const {
  std::vector<int> e(degrees_.size());
  for (std::size_t k = 0; k < degrees_.size(); ++k) {
    e[k] = static_cast<int>(i % static_cast<std::size_t>(degrees_[k]));
    i /= static_cast<std::size_t>(degrees_[k]);
  }
  return e;
}

std::size_t QuotientAlgebra::index_of(const std::vector<int>& e) const {
  std::size_t idx = 0, stride = 1;
  for (std::size_t k = 0; k < degrees_.size(); ++k) {
    idx += static_cast<std::size_t>(e[k]) * stride;
    stride *= static_cast<std::size_t>(degrees_[k]);
  }
  return idx;
}

std::vector<Rational> QuotientAlgebra::reduce_monomial(std::vector<int> e) {
  auto hit = memo_.find(e);
  if (hit != memo_.end()) return hit->second;
  std::vector<Rational> out(dim_, Rational(0));
  int k = static_cast<int>(degrees_.size()) - 1;
  while (k >= 0 && e[static_cast<std::size_t>(k)] < degrees_[static_cast<std::size_t>(k)]) --k;
  if (k < 0) {
    out[index_of(e)] = 1;
  } else {
    const auto uk = static_cast<std::size_t>(k);
    std::vector<int> rest = e;
    rest[uk] -= degrees_[uk];
    for (const auto& [mono, c] : relations_[uk].reduction) {
      std::vector<int> next = rest;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] += mono[i];
      const auto part = reduce_monomial(next);
      for (std::size_t i = 0; i < dim_; ++i) {
        if (part[i] != 0) out[i] += c * part[i];
      }
    }
  }
  memo_.emplace(std::move(e), out);
  return out;
}

const std::vector<Rational>& QuotientAlgebra::product(std::size_t i, std::size_t j) const {
  return table_[i * dim_ + j];
}

AlgebraElement QuotientAlgebra::zero() const {
  return AlgebraElement(shared_from_this(), std::vector<Rational>(dim_, Rational(0)));
}

AlgebraElement QuotientAlgebra::one() const { return constant(Rational(1)); }

AlgebraElement QuotientAlgebra::constant(const Rational& c) const {
  std::vector<Rational> v(dim_, Rational(0));
  v[0] = c;
  return AlgebraElement(shared_from_this(), std::move(v));
}

AlgebraElement QuotientAlgebra::gen(const std::string& name) const {
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (names_[k] != name) continue;
    std::vector<int> e(names_.size(), 0);
    e[k] = 1;
    std::vector<Rational> v(dim_, Rational(0));
    if (degrees_[k] > 1) {
      v[index_of(e)] = 1;
    } else {
      // A degree-one generator is itself a lower expression.
      for (const auto& [mono, c] : relations_[k].reduction) {
        std::vector<int> m = mono;
        m[k] = 0;
        v[index_of(m)] += c;
      }
    }
    return AlgebraElement(shared_from_this(), std::move(v));
  }
  throw std::invalid_argument("unknown generator '" + name + "'");
}

AlgebraElement QuotientAlgebra::element(std::vector<Rational> coords) const {
  if (coords.size() != dim_) throw std::invalid_argument("dimension mismatch");
  return AlgebraElement(shared_from_this(), std::move(coords));
}

AlgebraElement::AlgebraElement(std::shared_ptr<const QuotientAlgebra> alg, std::vector<Rational> coords)
    : alg_(std::move(alg)), c_(std::move(coords)) {
  if (!alg_ || c_.size() != alg_->dimension()) throw std::invalid_argument("dimension mismatch");
}

void AlgebraElement::check_same(const AlgebraElement& o) const {
  if (alg_ != o.alg_) {
    if (!alg_ || !o.alg_ || alg_->dimension() != o.alg_->dimension()) {
      throw std::invalid_argument("dimension mismatch");
    }
    throw std::invalid_argument("elements of different algebras");
  }
}

bool AlgebraElement::is_zero() const {
  for (const auto& x : c_) {
    if (x != 0) return false;
  }
  return true;
}

std::optional<Rational> AlgebraElement::as_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return std::nullopt;
  }
  return c_.empty() ? Rational(0) : c_[0];
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_same(b);
  const std::size_t n = a.c_.size();
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.c_[j] == 0) continue;
      const Rational s = a.c_[i] * b.c_[j];
      const auto& p = a.alg_->product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (p[k] != 0) out[k] += s * p[k];
      }
    }
  }
  return AlgebraElement(a.alg_, std::move(out));
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_same(b);
  return a.c_ == b.c_;
}

std::vector<std::vector<Rational>> AlgebraElement::multiplication_matrix() const {
  const std::size_t n = c_.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& p = alg_->product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (p[k] != 0) m[k][j] += c_[i] * p[k];
      }
    }
  }
  return m;
}

std::optional<AlgebraElement> AlgebraElement::try_inverse() const {
  std::vector<Rational> rhs(c_.size(), Rational(0));
  rhs[0] = 1;
  auto sol = solve_linear(multiplication_matrix(), std::move(rhs));
  if (!sol) return std::nullopt;
  return AlgebraElement(alg_, std::move(*sol));
}

AlgebraElement AlgebraElement::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw NotUnitError("non-invertible denominator");
  return *inv;
}

std::string AlgebraElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << twist8::to_string(c_[i]) << ")";
    const auto e = alg_->basis_exponents(i);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      os << "*" << alg_->generators()[k];
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return first ? "0" : os.str();
}

AlgebraElement pow(const AlgebraElement& x, unsigned e) {
  AlgebraElement r = x.algebra().one();
  AlgebraElement base = x;
  while (e) {
    if (e & 1U) r = r * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return r;
}

Rational inverse(const Rational& x) {
  if (x == 0) throw NotUnitError("non-invertible denominator");
  return 1 / x;
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw std::invalid_argument("dimension mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    const Rational inv = 1 / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
      rhs[i] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace twist8
