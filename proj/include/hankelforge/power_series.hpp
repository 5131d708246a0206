#pragma once

#include <string>
#include <vector>

#include "hankelforge/polynomial.hpp"

namespace hankelforge {

// Truncated formal power series: the first T coefficients a_0..a_{T-1} are
// known exactly, nothing beyond them is. Reading at an index >= T raises
// TruncationExceeded -- never a silent zero, so an under-truncated
// computation fails loudly instead of fabricating values.
//
// Every arithmetic result carries the minimum truncation of its inputs.
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<Rat> coeffs);
  static PowerSeries from_polynomial(const Polynomial& p, long truncation);
  static PowerSeries one(long truncation);

  long truncation() const { return static_cast<long>(coeffs_.size()); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  // Requires 0 <= idx < truncation().
  const Rat& at(long idx) const;

  PowerSeries truncated(long new_truncation) const;

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g);
  // Cauchy product, truncated to min(T_f, T_g).
  friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator*(const Rat& c, PowerSeries f);

  bool operator==(const PowerSeries& o) const { return coeffs_ == o.coeffs_; }

  // Multiplicative inverse; requires a_0 != 0 (ZeroConstantTerm otherwise).
  PowerSeries inverse() const;

  // k-th convolution power, k >= 1, by binary exponentiation.
  PowerSeries pow(long k) const;

  bool is_zero() const;

  std::string str() const;  // "[a0, a1, ...]" for diagnostics

 private:
  std::vector<Rat> coeffs_;
};

// Index of the first nonzero coefficient. A series that is zero through its
// whole truncation window is indistinguishable from zero:
// IndeterminateValuation.
long valuation(const PowerSeries& f);

// Unique power-series solution F of w + u F + v F^2 = 0, computed to the
// requested truncation by the triangular coefficient recursion. Requires
// v(0) = 0 and u(0) != 0 (BadEquation otherwise); the residual
// w + u F + v F^2 = 0 (mod x^T) is re-checked before returning.
PowerSeries solve_quadratic(const Polynomial& w, const Polynomial& u,
                            const Polynomial& v, long truncation);

// Same solver with series coefficients; truncation is the minimum of the
// three inputs' truncations.
PowerSeries solve_quadratic_series(const PowerSeries& w, const PowerSeries& u,
                                   const PowerSeries& v);

}  // namespace hankelforge
