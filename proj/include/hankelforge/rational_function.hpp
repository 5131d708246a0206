#pragma once

#include <optional>
#include <string>

#include "hankelforge/polynomial.hpp"
#include "hankelforge/power_series.hpp"

namespace hankelforge {

// Ratio of two polynomials whose denominator does not vanish at the origin,
// so the series expansion always exists. Kept in a canonical form:
// numerator and denominator coprime, denominator constant term 1. Equality
// is therefore plain representation equality.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(Rat(1))) {}  // zero
  explicit RationalFunction(Polynomial num);
  explicit RationalFunction(const Rat& c);
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  // Value at x = 0.
  Rat at_zero() const { return num_.coeff(0); }

  // Valuation of the numerator (the denominator is a unit at 0);
  // nullopt for the zero function.
  std::optional<long> valuation() const { return num_.valuation(); }

  PowerSeries to_series(long truncation) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const Rat& c, const RationalFunction& a);
  // Divisor must be nonzero with nonzero constant term (the quotient must
  // stay expandable at 0).
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  // Multiply by x^s.
  RationalFunction shifted_up(long s) const;
  // Exact division by x^s; requires valuation >= s.
  RationalFunction shifted_down(long s) const;

  std::string str(const std::string& var = "x") const;

 private:
  Polynomial num_, den_;
  void normalize();
};

// Series expansion of num/den to the requested truncation order.
PowerSeries rational_to_series(const RationalFunction& r, long truncation);

}  // namespace hankelforge
