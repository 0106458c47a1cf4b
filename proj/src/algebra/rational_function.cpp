#include "twist8/algebra/rational_function.hpp"

#include <stdexcept>

namespace twist8 {

RationalFunction::RationalFunction(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
}

Rational RationalFunction::evaluate(const std::map<std::string, Rational>& values) const {
  const Rational d = den_.evaluate(values);
  if (d == 0) throw std::domain_error("denominator vanishes");
  return num_.evaluate(values) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.num_.is_zero()) throw std::domain_error("division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  return *this;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

}  // namespace twist8
