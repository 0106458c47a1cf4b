#pragma once

#include <array>
#include <string>
#include <vector>

namespace twist8 {

/// 2x2 matrix over Z/n, n in {2, 4, 8}. Columns are images of the basis:
/// the matrix sends P to m00 P + m10 Q and Q to m01 P + m11 Q.
class ResidueMatrix {
 public:
  enum class Quotient { none, plus_minus_identity };

  ResidueMatrix() = default;
  ResidueMatrix(int n, int m00, int m01, int m10, int m11, Quotient q = Quotient::none);

  static ResidueMatrix identity(int n, Quotient q = Quotient::none);

  int modulus() const { return n_; }
  Quotient quotient() const { return q_; }
  int at(int i, int j) const { return e_[static_cast<std::size_t>(2 * i + j)]; }
  int det() const;
  bool invertible() const;
  /// Throws std::domain_error when det is not a unit mod n.
  ResidueMatrix inverse() const;
  ResidueMatrix negated() const;
  /// Reduction to Z/m for m dividing n.
  ResidueMatrix reduce(int m) const;
  ResidueMatrix with_quotient(Quotient q) const;
  /// The lexicographically smaller of M and -M.
  ResidueMatrix normalized() const;
  /// Image of a coordinate vector (column convention).
  std::array<int, 2> apply(const std::array<int, 2>& v) const;

  ResidueMatrix operator*(const ResidueMatrix& o) const;
  /// Equality honours the +-I quotient when either side carries it.
  bool operator==(const ResidueMatrix& o) const;
  bool operator!=(const ResidueMatrix& o) const { return !(*this == o); }
  /// Strict order on normalized entries, for use as a map key.
  bool operator<(const ResidueMatrix& o) const;

  std::array<int, 4> entries() const { return e_; }
  /// "(a b;c d)"
  std::string to_string() const;

 private:
  int n_ = 8;
  std::array<int, 4> e_{1, 0, 0, 1};
  Quotient q_ = Quotient::none;
};

/// Every invertible matrix over Z/n.
std::vector<ResidueMatrix> enumerate_gl2(int n);

}  // namespace twist8
