#pragma once

// Finite-dimensional commutative Q-algebras presented as towers
//   g_k^{d_k} = (expression in g_0..g_k with lower g_k-degree),
// e.g. Q(i), Q(zeta_8), Q[theta]/(theta^3 + a theta + b) and the 32-dimensional
// fiber algebra of X(8) over a rational u.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twist8/algebra/rational.hpp"

namespace twist8 {

class AlgebraElement;

class QuotientAlgebra : public std::enable_shared_from_this<QuotientAlgebra> {
 public:
  /// Reduction g^degree = sum of coeff * (monomial in the generators).
  /// Monomials are exponent vectors over the generators declared so far,
  /// including the one being defined (with exponent < degree).
  struct Relation {
    std::string generator;
    int degree;
    std::vector<std::pair<std::vector<int>, Rational>> reduction;
  };

  static std::shared_ptr<const QuotientAlgebra> create(std::vector<Relation> relations);

  /// Q[g]/(g^n - (c_0 + c_1 g + ... + c_{n-1} g^{n-1})) from the list c.
  static std::shared_ptr<const QuotientAlgebra> simple(const std::string& generator,
                                                      const std::vector<Rational>& lower);

  std::size_t dimension() const { return dim_; }
  const std::vector<std::string>& generators() const { return names_; }
  const std::vector<int>& degrees() const { return degrees_; }
  /// Exponent vector of basis element i (mixed radix, first generator fastest).
  std::vector<int> basis_exponents(std::size_t i) const;

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement constant(const Rational& c) const;
  AlgebraElement gen(const std::string& name) const;
  AlgebraElement element(std::vector<Rational> coords) const;

  /// Coordinates of basis_i * basis_j.
  const std::vector<Rational>& product(std::size_t i, std::size_t j) const;

 private:
  explicit QuotientAlgebra(std::vector<Relation> relations);
  std::size_t index_of(const std::vector<int>& e) const;
  std::vector<Rational> reduce_monomial(std::vector<int> e);

  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::vector<Relation> relations_;
  std::size_t dim_ = 1;
  std::vector<std::vector<Rational>> table_;  // dim*dim entries
  std::map<std::vector<int>, std::vector<Rational>> memo_;
};

class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(std::shared_ptr<const QuotientAlgebra> alg, std::vector<Rational> coords);

  const QuotientAlgebra& algebra() const { return *alg_; }
  const std::shared_ptr<const QuotientAlgebra>& algebra_ptr() const { return alg_; }
  const std::vector<Rational>& coords() const { return c_; }
  bool is_zero() const;
  /// The rational value when the element lies in Q.
  std::optional<Rational> as_rational() const;

  /// Matrix of multiplication by this element (column j = this * basis_j).
  std::vector<std::vector<Rational>> multiplication_matrix() const;
  std::optional<AlgebraElement> try_inverse() const;
  /// Throws NotUnitError when the element is a zero divisor.
  AlgebraElement inverse() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= s; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= Rational(-1); }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  std::string to_string() const;

 private:
  void check_same(const AlgebraElement& o) const;
  std::shared_ptr<const QuotientAlgebra> alg_;
  std::vector<Rational> c_;
};

AlgebraElement pow(const AlgebraElement& x, unsigned e);

// Uniform ring interface used by the generic elliptic group law.
inline bool is_zero(const AlgebraElement& x) { return x.is_zero(); }
inline AlgebraElement inverse(const AlgebraElement& x) { return x.inverse(); }
inline bool is_zero(const Rational& x) { return x == 0; }
Rational inverse(const Rational& x);

/// Solves M x = rhs exactly; std::nullopt when M is singular.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> rhs);

}  // namespace twist8
