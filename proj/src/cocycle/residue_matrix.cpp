#include "twist8/cocycle/residue_matrix.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twist8 {

namespace {

int mod(int x, int n) {
  x %= n;
  return x < 0 ? x + n : x;
}

}  // namespace

ResidueMatrix::ResidueMatrix(int n, int m00, int m01, int m10, int m11, Quotient q) : n_(n), q_(q) {
  if (n != 2 && n != 4 && n != 8) throw std::invalid_argument("modulus must be 2, 4 or 8");
  e_ = {mod(m00, n), mod(m01, n), mod(m10, n), mod(m11, n)};
}

ResidueMatrix ResidueMatrix::identity(int n, Quotient q) { return ResidueMatrix(n, 1, 0, 0, 1, q); }

int ResidueMatrix::det() const { return mod(e_[0] * e_[3] - e_[1] * e_[2], n_); }

bool ResidueMatrix::invertible() const { return std::gcd(det(), n_) == 1; }

ResidueMatrix ResidueMatrix::inverse() const {
  const int d = det();
  int dinv = -1;
  for (int k = 1; k < n_; ++k) {
    if (mod(d * k, n_) == 1) dinv = k;
  }
  if (dinv < 0) throw std::domain_error("matrix not invertible mod " + std::to_string(n_));
  return ResidueMatrix(n_, e_[3] * dinv, -e_[1] * dinv, -e_[2] * dinv, e_[0] * dinv, q_);
}

ResidueMatrix ResidueMatrix::negated() const { return ResidueMatrix(n_, -e_[0], -e_[1], -e_[2], -e_[3], q_); }

ResidueMatrix ResidueMatrix::reduce(int m) const {
  if (n_ % m != 0) throw std::invalid_argument("reduction modulus must divide n");
  return ResidueMatrix(m, e_[0], e_[1], e_[2], e_[3], q_);
}

ResidueMatrix ResidueMatrix::with_quotient(Quotient q) const {
  ResidueMatrix r = *this;
  r.q_ = q;
  return r;
}

ResidueMatrix ResidueMatrix::normalized() const {
  const ResidueMatrix neg = negated();
  return neg.e_ < e_ ? neg : *this;
}

std::array<int, 2> ResidueMatrix::apply(const std::array<int, 2>& v) const {
  return {mod(e_[0] * v[0] + e_[1] * v[1], n_), mod(e_[2] * v[0] + e_[3] * v[1], n_)};
}

ResidueMatrix ResidueMatrix::operator*(const ResidueMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("moduli differ");
  const Quotient q = (q_ == Quotient::plus_minus_identity || o.q_ == Quotient::plus_minus_identity)
                         ? Quotient::plus_minus_identity
                         : Quotient::none;
  return ResidueMatrix(n_, e_[0] * o.e_[0] + e_[1] * o.e_[2], e_[0] * o.e_[1] + e_[1] * o.e_[3],
                       e_[2] * o.e_[0] + e_[3] * o.e_[2], e_[2] * o.e_[1] + e_[3] * o.e_[3], q);
}

bool ResidueMatrix::operator==(const ResidueMatrix& o) const {
  if (n_ != o.n_) return false;
  if (q_ == Quotient::plus_minus_identity || o.q_ == Quotient::plus_minus_identity) {
    return normalized().e_ == o.normalized().e_;
  }
  return e_ == o.e_;
}

bool ResidueMatrix::operator<(const ResidueMatrix& o) const {
  const auto a = q_ == Quotient::none ? e_ : normalized().e_;
  const auto b = o.q_ == Quotient::none ? o.e_ : o.normalized().e_;
  return a < b;
}

std::string ResidueMatrix::to_string() const {
  std::ostringstream os;
  os << "(" << e_[0] << " " << e_[1] << ";" << e_[2] << " " << e_[3] << ")";
  return os.str();
}

std::vector<ResidueMatrix> enumerate_gl2(int n) {
  std::vector<ResidueMatrix> out;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          ResidueMatrix m(n, a, b, c, d);
          if (m.invertible()) out.push_back(m);
        }
      }
    }
  }
  return out;
}

}  // namespace twist8
