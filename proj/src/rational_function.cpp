#include "hankelforge/rational_function.hpp"

#include <stdexcept>

namespace hankelforge {

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(Rat(1))) {}

RationalFunction::RationalFunction(const Rat& c)
    : num_(Polynomial::constant(c)), den_(Polynomial::constant(Rat(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.coeff(0) == 0)
    throw std::invalid_argument("rational function denominator vanishes at 0");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(Rat(1));
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    auto [qn, rn] = divmod(num_, g);
    auto [qd, rd] = divmod(den_, g);
    if (!rn.is_zero() || !rd.is_zero())
      throw std::logic_error("gcd does not divide exactly");
    num_ = std::move(qn);
    den_ = std::move(qd);
  }
  Rat c = den_.coeff(0);
  num_ /= c;
  den_ /= c;
}

PowerSeries RationalFunction::to_series(long truncation) const {
  PowerSeries n = PowerSeries::from_polynomial(num_, truncation);
  if (den_.is_one()) return n;
  return n * PowerSeries::from_polynomial(den_, truncation).inverse();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator*(const Rat& c, const RationalFunction& a) {
  return RationalFunction(a.num_ * c, a.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  if (b.num_.coeff(0) == 0)
    throw std::domain_error("quotient would not be expandable at 0 (divisor has positive valuation)");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::shifted_up(long s) const {
  if (is_zero()) return *this;
  return RationalFunction(num_.shifted_up(s), den_);
}

RationalFunction RationalFunction::shifted_down(long s) const {
  if (is_zero()) return *this;
  return RationalFunction(num_.shifted_down(s), den_);
}

std::string RationalFunction::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

PowerSeries rational_to_series(const RationalFunction& r, long truncation) {
  return r.to_series(truncation);
}

}  // namespace hankelforge
