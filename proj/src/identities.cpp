#include "hankelforge/identities.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hankelforge/errors.hpp"

namespace hankelforge {

void QuadraticFamily::validate() const {
  if (v.coeff(0) != 0)
    throw BadEquation("family '" + name + "': v(0) must be 0");
  if (u.coeff(0) == 0)
    throw BadEquation("family '" + name + "': u(0) must be nonzero");
  if (a) {
    if (*a < 1) throw BadEquation("family '" + name + "': exponent a must be >= 1");
    if (!(w == Polynomial::constant(Rat(1))))
      throw BadEquation("family '" + name + "': shifted-identity form needs w = 1");
    if (!(v == Polynomial::monomial(*a)))
      throw BadEquation("family '" + name + "': shifted-identity form needs v = x^a");
  }
}

PowerSeries QuadraticFamily::solve(long truncation) const {
  validate();
  return solve_quadratic(w, u, v, truncation);
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::fails: return "FAILS";
    case CheckStatus::vacuous: return "vacuous";
    case CheckStatus::degree_condition_failed: return "degree-condition-failed";
  }
  return "?";
}

bool IdentityReport::all_hold() const { return failure_count() == 0; }

std::size_t IdentityReport::failure_count() const {
  std::size_t n = 0;
  for (const auto& inst : instances)
    if (!inst.ok()) ++n;
  return n;
}

Int lucas_triangle(long k, long i) {
  if (k < 0) throw std::invalid_argument("lucas_triangle: k must be >= 0");
  if (i < 0 || 2 * i > k) return Int(0);
  // Apex of the triangle (A034807 convention), anchoring the recursion
  // T(k,i) = T(k-1,i) + T(k-2,i-1) at k = 2.
  if (k == 0) return Int(2);
  Int num = factorial(static_cast<unsigned long>(k - i - 1)) * k;
  Int den = factorial(static_cast<unsigned long>(i)) *
            factorial(static_cast<unsigned long>(k - 2 * i));
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("lucas_triangle: entry is not an integer");
  return q;
}

Polynomial lucas_polynomial(const QuadraticFamily& fam, long k) {
  if (k < 1) throw std::invalid_argument("lucas_polynomial: k must be >= 1");
  const Polynomial vw = fam.v * fam.w;
  std::vector<Polynomial> u_pow(static_cast<std::size_t>(k) + 1);
  u_pow[0] = Polynomial::constant(Rat(1));
  for (long j = 1; j <= k; ++j) u_pow[static_cast<std::size_t>(j)] = u_pow[static_cast<std::size_t>(j - 1)] * fam.u;
  Polynomial acc;
  Polynomial vw_pow = Polynomial::constant(Rat(1));
  for (long i = 0; 2 * i <= k; ++i) {
    Polynomial term = u_pow[static_cast<std::size_t>(k - 2 * i)] * vw_pow;
    term *= Rat(lucas_triangle(k, i) * neg_one_pow(k + i));
    acc += term;
    vw_pow *= vw;
  }
  return acc;
}

namespace {

// First index where the two series disagree, if any.
std::optional<long> first_mismatch(const PowerSeries& a, const PowerSeries& b) {
  long t = std::min(a.truncation(), b.truncation());
  for (long i = 0; i < t; ++i)
    if (a.at(i) != b.at(i)) return i;
  return std::nullopt;
}

}  // namespace

IdentityReport check_convolution_identity(const QuadraticFamily& fam, long k,
                                          long truncation) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  fam.validate();
  Rat f0 = -fam.w.coeff(0) / fam.u.coeff(0);
  if (f0 == 0)
    throw BadEquation("family '" + fam.name + "': F(0) = 0, the reciprocal side 1/F^k does not exist");

  IdentityReport report{"convolution-identity", {}};
  IdentityInstance inst;
  {
    std::ostringstream os;
    os << "family=" << fam.name << " k=" << k << " order=" << truncation;
    inst.params = os.str();
  }

  PowerSeries f = fam.solve(truncation);
  PowerSeries fk = f.pow(k);
  PowerSeries vk = PowerSeries::from_polynomial(fam.v.pow(static_cast<unsigned long>(k)), truncation);
  PowerSeries wk = PowerSeries::from_polynomial(fam.w.pow(static_cast<unsigned long>(k)), truncation);
  PowerSeries lhs = fk * vk + wk * fk.inverse();
  PowerSeries rhs = PowerSeries::from_polynomial(lucas_polynomial(fam, k), truncation);

  auto bad = first_mismatch(lhs, rhs);
  if (!bad) {
    // Same content without the division: F^k (F^k v^k - L_k) + w^k = 0.
    PowerSeries residual = fk * (fk * vk - rhs) + wk;
    if (!residual.is_zero()) bad = valuation(residual);
  }
  if (bad) {
    inst.status = CheckStatus::fails;
    inst.lhs = "coeff[x^" + std::to_string(*bad) + "] lhs = " + to_string(lhs.at(*bad));
    inst.rhs = "coeff[x^" + std::to_string(*bad) + "] rhs = " + to_string(rhs.at(*bad));
  } else {
    inst.status = CheckStatus::holds;
  }
  report.instances.push_back(std::move(inst));
  return report;
}

IdentityReport check_cigler_st(const PowerSeries& s, long m_shift, long n_order) {
  if (m_shift < 0 || n_order < 0)
    throw std::invalid_argument("check_cigler_st: M and N must be nonnegative");
  if (s.at(0) != 1)
    throw std::invalid_argument("check_cigler_st: s must have constant term 1");

  IdentityReport report{"reciprocal-hankel", {}};
  IdentityInstance inst;
  inst.params = "M=" + std::to_string(m_shift) + " N=" + std::to_string(n_order);

  PowerSeries t = s.inverse();
  Rat lhs = det_exact(hankel_matrix(s, -m_shift, n_order + m_shift + 1));
  Rat rhs = Rat(neg_one_pow(n_order) * binom2_sign(m_shift + 1)) *
            det_exact(hankel_matrix(t, m_shift + 2, n_order));

  inst.lhs = to_string(lhs);
  inst.rhs = to_string(rhs);
  inst.status = lhs == rhs ? CheckStatus::holds : CheckStatus::fails;
  report.instances.push_back(std::move(inst));
  return report;
}

IdentityReport check_shift_reflection(const QuadraticFamily& fam, long k, long m,
                                      Parity parity, long n_max) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (m < 0 || n_max < 0) throw std::invalid_argument("m and n_max must be >= 0");
  fam.validate();
  if (!fam.a)
    throw BadEquation("family '" + fam.name + "' is not in 1 + uF + x^a F^2 = 0 form");
  const long a = *fam.a;

  const bool even = parity == Parity::even;
  const long K = even ? 2 * k : 2 * k - 1;
  const long window = even ? m + a * k : m + a * k - 1;  // shift amount
  const long left_shift = even ? 1 - m - a * k : 2 - m - a * k;
  const long right_shift = even ? m + 1 - a * k : m + a - a * k;
  const int sign = binom2_sign(window);

  IdentityReport report{even ? "shift-reflection-even" : "shift-reflection-odd", {}};
  std::ostringstream base;
  base << "family=" << fam.name << " k=" << k << " m=" << m
       << " K=" << K << " M=" << left_shift;

  // Degree condition under which the identity is stated.
  const long degL = lucas_polynomial(fam, K).degree();
  const bool cond = even ? (k * a >= degL) : (k * a - 1 >= degL);

  long max_order = std::max(window - 1, n_max + window);
  long trunc = std::max(min_truncation(left_shift, max_order),
                        min_truncation(right_shift, n_max));
  PowerSeries f = fam.solve(trunc);
  PowerSeries p = f.pow(K);

  if (!cond) {
    IdentityInstance inst;
    inst.params = base.str() + " (degree condition ka" + (even ? "" : "-1") +
                  " >= deg L_K fails: deg=" + std::to_string(degL) + ")";
    inst.status = CheckStatus::degree_condition_failed;
    // Report both sides at n = 0 for exploration; nothing is asserted.
    Rat l = shifted_hankel_det(p, {1, left_shift, window});
    Rat r = Rat(sign) * shifted_hankel_det(p, {1, right_shift, 0});
    inst.lhs = to_string(l);
    inst.rhs = to_string(r);
    report.instances.push_back(std::move(inst));
    return report;
  }

  // Vanishing window: each matrix has an all-zero first row, so the
  // determinant is zero. Both facts are checked.
  if (window - 1 < 1) {
    IdentityInstance inst;
    inst.params = base.str() + " window=empty";
    inst.status = CheckStatus::vacuous;
    report.instances.push_back(std::move(inst));
  }
  for (long N = 1; N <= window - 1; ++N) {
    IdentityInstance inst;
    inst.params = base.str() + " window N=" + std::to_string(N);
    bool row_zero = true;
    for (long j = 0; j < N; ++j)
      if (coefficient_at(p, j + left_shift) != 0) row_zero = false;
    Rat d = det_exact(hankel_matrix(p, left_shift, N));
    inst.lhs = to_string(d);
    inst.rhs = "0";
    inst.status = (row_zero && d == 0) ? CheckStatus::holds : CheckStatus::fails;
    if (!row_zero) inst.lhs += " (first row not identically zero)";
    report.instances.push_back(std::move(inst));
  }

  // Reflection: D_{K,left}(n + window) = sign * D_{K,right}(n).
  for (long n = 0; n <= n_max; ++n) {
    IdentityInstance inst;
    inst.params = base.str() + " n=" + std::to_string(n);
    Rat lhs = det_exact(hankel_matrix(p, left_shift, n + window));
    Rat rhs = Rat(sign) * det_exact(hankel_matrix(p, right_shift, n));
    inst.lhs = to_string(lhs);
    inst.rhs = to_string(rhs);
    inst.status = lhs == rhs ? CheckStatus::holds : CheckStatus::fails;
    report.instances.push_back(std::move(inst));
  }
  return report;
}

}  // namespace hankelforge
