#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hankelforge/hankel.hpp"
#include "hankelforge/polynomial.hpp"
#include "hankelforge/power_series.hpp"

namespace hankelforge {

// A sequence family cut out by the quadratic functional equation
// w + u F + v F^2 = 0 with v(0) = 0 and u(0) != 0, which pins down F
// uniquely as a power series. When the family is additionally of the shape
// 1 + u F + x^a F^2 = 0 the exponent `a` is recorded: that is the shape the
// shifted-determinant identities (check_shift_reflection) require.
struct QuadraticFamily {
  std::string name;  // "catalan", "motzkin", ..., or "custom"
  Polynomial w, u, v;
  std::optional<long> a;

  void validate() const;  // BadEquation on any violated invariant
  PowerSeries solve(long truncation) const;
};

enum class CheckStatus {
  holds,
  fails,
  vacuous,                  // empty instance (e.g. an empty vanishing window)
  degree_condition_failed,  // identity not asserted; values may still be reported
};

std::string to_string(CheckStatus s);

struct IdentityInstance {
  std::string params;
  CheckStatus status = CheckStatus::holds;
  // Exact values of the two sides; always populated for a failing instance.
  std::string lhs, rhs;

  bool ok() const { return status != CheckStatus::fails; }
};

struct IdentityReport {
  std::string claim;
  std::vector<IdentityInstance> instances;

  bool all_hold() const;
  std::size_t failure_count() const;
};

// Entry T(k,i) of the Lucas-polynomial coefficient triangle,
// (k-i-1)! k / (i! (k-2i)!); zero outside 0 <= i <= k/2 so the recursion
// T(k,i) = T(k-1,i) + T(k-2,i-1) can be applied blindly at the boundary,
// with the apex T(0,0) = 2 anchoring it.
Int lucas_triangle(long k, long i);

// L_k = sum_i (-1)^(k+i) T(k,i) u^(k-2i) (v w)^i. Satisfies
// L_{k+1} = -u L_k - v w L_{k-1}, and F^k v^k + w^k / F^k = L_k.
Polynomial lucas_polynomial(const QuadraticFamily& fam, long k);

// Checks F^k v^k + w^k / F^k = L_k coefficient-wise to the given order,
// along with the equivalent polynomial form F^k (F^k v^k - L_k) + w^k = 0.
IdentityReport check_convolution_identity(const QuadraticFamily& fam, long k,
                                          long truncation);

// Checks det(s_{i+j-M}), i,j = 0..N+M, against
// (-1)^(N + C(M+1,2)) det(t_{i+j+M+2}), i,j = 0..N-1, where t = 1/s.
// Requires s_0 = 1 and M, N >= 0.
IdentityReport check_cigler_st(const PowerSeries& s, long m_shift, long n_order);

enum class Parity { even, odd };

// The even/odd shifted-determinant identities for a family in
// 1 + u F + x^a F^2 = 0 form. With K = 2k (even) resp. K = 2k-1 (odd) and
// shift window w = m + ak (even) resp. m + ak - 1 (odd):
//   D_{K,s}(N) = 0 for N = 1..w-1, where s = 1-m-ak (even), 2-m-ak (odd);
//   D_{K,s}(n + w) = (-1)^C(w,2) D_{K,s'}(n) for n = 0..n_max,
//     with s' = m+1-ak (even), m+a-ak (odd).
// Applies only under the degree condition ka >= deg L_{2k} (even) resp.
// ka-1 >= deg L_{2k-1} (odd); otherwise the report carries a
// degree_condition_failed instance with both sides evaluated but nothing
// asserted. Matrices inside the vanishing window are also checked to have an
// identically zero first row, which is the structural reason they vanish.
IdentityReport check_shift_reflection(const QuadraticFamily& fam, long k, long m,
                                      Parity parity, long n_max);

}  // namespace hankelforge
