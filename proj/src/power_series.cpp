#include "hankelforge/power_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hankelforge/errors.hpp"

namespace hankelforge {

PowerSeries::PowerSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("power series needs at least one known coefficient");
}

PowerSeries PowerSeries::from_polynomial(const Polynomial& p, long truncation) {
  if (truncation < 1) throw std::invalid_argument("truncation must be positive");
  std::vector<Rat> c(static_cast<std::size_t>(truncation), Rat(0));
  long upto = std::min(truncation - 1, p.degree());
  for (long i = 0; i <= upto; ++i) c[static_cast<std::size_t>(i)] = p.coeff(i);
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::one(long truncation) {
  return from_polynomial(Polynomial::constant(Rat(1)), truncation);
}

const Rat& PowerSeries::at(long idx) const {
  if (idx < 0) throw std::invalid_argument("negative series index");
  if (idx >= truncation())
    throw TruncationExceeded("coefficient " + std::to_string(idx) +
                             " requested, only " + std::to_string(truncation()) +
                             " known");
  return coeffs_[static_cast<std::size_t>(idx)];
}

PowerSeries PowerSeries::truncated(long new_truncation) const {
  if (new_truncation < 1 || new_truncation > truncation())
    throw std::invalid_argument("cannot extend a truncated series");
  return PowerSeries(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + new_truncation));
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
  long t = std::min(f.truncation(), g.truncation());
  std::vector<Rat> c(static_cast<std::size_t>(t));
  for (long i = 0; i < t; ++i)
    c[static_cast<std::size_t>(i)] = f.at(i) + g.at(i);
  return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) {
  long t = std::min(f.truncation(), g.truncation());
  std::vector<Rat> c(static_cast<std::size_t>(t));
  for (long i = 0; i < t; ++i)
    c[static_cast<std::size_t>(i)] = f.at(i) - g.at(i);
  return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
  long t = std::min(f.truncation(), g.truncation());
  std::vector<Rat> c(static_cast<std::size_t>(t), Rat(0));
  for (long i = 0; i < t; ++i) {
    if (f.at(i) == 0) continue;
    for (long j = 0; i + j < t; ++j)
      c[static_cast<std::size_t>(i + j)] += f.at(i) * g.at(j);
  }
  return PowerSeries(std::move(c));
}

PowerSeries operator*(const Rat& c, PowerSeries f) {
  for (auto& x : f.coeffs_) x *= c;
  return f;
}

PowerSeries PowerSeries::inverse() const {
  if (coeffs_[0] == 0)
    throw ZeroConstantTerm("series with zero constant term has no inverse");
  long t = truncation();
  std::vector<Rat> b(static_cast<std::size_t>(t));
  b[0] = 1 / coeffs_[0];
  for (long n = 1; n < t; ++n) {
    Rat s(0);
    for (long i = 1; i <= n; ++i)
      s += coeffs_[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(n - i)];
    b[static_cast<std::size_t>(n)] = -s / coeffs_[0];
  }
  return PowerSeries(std::move(b));
}

PowerSeries PowerSeries::pow(long k) const {
  if (k < 1) throw std::invalid_argument("convolution power needs k >= 1");
  PowerSeries base = *this;
  PowerSeries acc = one(truncation());
  bool acc_is_one = true;
  while (k > 0) {
    if (k & 1) {
      acc = acc_is_one ? base : acc * base;
      acc_is_one = false;
    }
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

std::string PowerSeries::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i].get_str();
  }
  os << "]";
  return os.str();
}

long valuation(const PowerSeries& f) {
  for (long i = 0; i < f.truncation(); ++i)
    if (f.at(i) != 0) return i;
  throw IndeterminateValuation("series is zero to its truncation order " +
                               std::to_string(f.truncation()));
}

PowerSeries solve_quadratic_series(const PowerSeries& w, const PowerSeries& u,
                                   const PowerSeries& v) {
  long t = std::min({w.truncation(), u.truncation(), v.truncation()});
  if (v.at(0) != 0)
    throw BadEquation("quadratic coefficient needs v(0) = 0, got " + to_string(v.at(0)));
  if (u.at(0) == 0) throw BadEquation("linear coefficient needs u(0) != 0");

  // Coefficient of x^n in w + uF + vF^2 determines a_n from a_0..a_{n-1}:
  // the v-part only touches lower-index square terms because v(0) = 0.
  std::vector<Rat> a(static_cast<std::size_t>(t));
  std::vector<Rat> sq(static_cast<std::size_t>(t));  // running coefficients of F^2
  const Rat u0 = u.at(0);
  a[0] = -w.at(0) / u0;
  sq[0] = a[0] * a[0];
  for (long n = 1; n < t; ++n) {
    Rat s = w.at(n);
    for (long i = 1; i <= n; ++i) {
      if (u.at(i) != 0) s += u.at(i) * a[static_cast<std::size_t>(n - i)];
      if (v.at(i) != 0) s += v.at(i) * sq[static_cast<std::size_t>(n - i)];
    }
    a[static_cast<std::size_t>(n)] = -s / u0;
    Rat sqn(0);
    for (long j = 0; j <= n; ++j)
      sqn += a[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(n - j)];
    sq[static_cast<std::size_t>(n)] = sqn;
  }

  PowerSeries f(std::move(a));
  PowerSeries residual = w + u * f + v * (f * f);
  if (!residual.is_zero())
    throw BadEquation("residual of quadratic solve is nonzero (internal)");
  return f;
}

PowerSeries solve_quadratic(const Polynomial& w, const Polynomial& u,
                            const Polynomial& v, long truncation) {
  if (truncation < 1) throw std::invalid_argument("truncation must be positive");
  if (v.coeff(0) != 0)
    throw BadEquation("quadratic coefficient needs v(0) = 0, got " + to_string(v.coeff(0)));
  if (u.coeff(0) == 0) throw BadEquation("linear coefficient needs u(0) != 0");
  return solve_quadratic_series(PowerSeries::from_polynomial(w, truncation),
                                PowerSeries::from_polynomial(u, truncation),
                                PowerSeries::from_polynomial(v, truncation));
}

}  // namespace hankelforge
