#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hankelforge/numeric.hpp"

namespace hankelforge {

// Dense univariate polynomial with exact rational coefficients, stored in
// ascending degree with no trailing zeros. The zero polynomial is the empty
// coefficient sequence; its degree is reported as kMinusInfinity.
class Polynomial {
 public:
  static constexpr long kMinusInfinity = -1;

  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Rat& c);
  static Polynomial monomial(long degree, const Rat& c = Rat(1));

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  // kMinusInfinity for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  // Index of the first nonzero coefficient; nullopt ("infinite") for zero.
  std::optional<long> valuation() const;

  const std::vector<Rat>& coeffs() const { return coeffs_; }

  // Zero outside [0, degree]; safe for any index.
  Rat coeff(long i) const;
  Rat leading() const;

  Rat operator()(const Rat& x) const;  // Horner evaluation

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rat& c);
  Polynomial& operator/=(const Rat& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rat& c) { return a *= c; }
  friend Polynomial operator*(const Rat& c, Polynomial a) { return a *= c; }
  friend Polynomial operator/(Polynomial a, const Rat& c) { return a /= c; }

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  Polynomial pow(unsigned long k) const;

  // Multiply by x^s.
  Polynomial shifted_up(long s) const;
  // Exact division by x^s; requires valuation >= s.
  Polynomial shifted_down(long s) const;

  std::string str(const std::string& var = "x") const;

 private:
  std::vector<Rat> coeffs_;
  void trim();
};

// Quotient and remainder of a by b (b nonzero), deg(rem) < deg(b).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

// Monic gcd; zero polynomial if both inputs are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace hankelforge
