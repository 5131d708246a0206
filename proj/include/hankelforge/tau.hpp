#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hankelforge/rational_function.hpp"

namespace hankelforge {

inline constexpr long kDefaultTauCheckOrder = 16;

// Functional equation in the canonical shape
//
//     F = x^d / (u + x^k v F),        u(0) != 0, v(0) != 0, k >= 1,
//
// whose unique power-series solution has valuation exactly d. The
// coefficients u and v are rational functions, which the quadratic
// transformation keeps exact and closed.
struct CanonicalEquation {
  long d = 0;
  long k = 1;
  RationalFunction u, v;

  void validate() const;  // NotCanonicalizable on a violated invariant

  // Series expansion of the solution, from x^k v F^2 + u F - x^d = 0.
  PowerSeries series(long truncation) const;

  bool operator==(const CanonicalEquation& o) const {
    return d == o.d && k == o.k && u == o.u && v == o.v;
  }

  std::string str() const;
};

enum class TauCase { i, ii, iii };

std::string to_string(TauCase c);

// One determinant law: det H_{n-offset}(after) = sign * scale_base^n *
// det H_n(before) for all n >= offset. Case i has offset 0 and base u(0);
// cases ii/iii have offset d+1, sign (-1)^C(d+1,2) and base 1.
struct DetRelation {
  TauCase tag = TauCase::i;
  long offset = 0;
  int sign = 1;
  Rat scale_base = Rat(1);

  std::string str() const;
};

struct TauStep {
  CanonicalEquation eq;  // equation after the step
  DetRelation rel;       // law linking the previous equation to eq
};

struct TauTrace {
  CanonicalEquation start;
  std::vector<TauStep> steps;
  std::string stop_reason;  // nonempty when iteration stopped early

  std::size_t length() const { return steps.size(); }
  // Position 0 is the starting equation.
  const CanonicalEquation& equation_at(std::size_t pos) const;
};

// Rewrites a F^2 + b F + c = 0 (a, c nonzero, b(0) != 0) into canonical
// form: with c = -x^d chat (chat a unit at 0), u = b/chat and
// x^k v = a/chat. Needs k = val(a) >= 1. The returned equation's series is
// checked to solve the input quadratic up to check_order.
CanonicalEquation canonicalize(const RationalFunction& a, const RationalFunction& b,
                               const RationalFunction& c,
                               long check_order = kDefaultTauCheckOrder);

// Unique split u = u_L + x^(d+2) u_H with deg u_L <= d+1; u_H keeps the
// same denominator as u.
std::pair<Polynomial, RationalFunction> decompose_u(const RationalFunction& u, long d);

// One quadratic-transformation step; dispatches on (u(0), k):
//   i)   u(0) != 1:          next is u(0) F, same (d, k);
//   ii)  u(0) = 1, k = 1:    next is x^{-1}(G - G(0)) for the stated G;
//   iii) u(0) = 1, k >= 2:   next is the stated G.
// The series transform law is verified to check_order before returning.
std::pair<CanonicalEquation, DetRelation> tau_step(const CanonicalEquation& eq,
                                                   long check_order = kDefaultTauCheckOrder);

// Applies tau_step up to `steps` times (>= 1), stopping early with a
// diagnostic if a step cannot be canonicalized.
TauTrace iterate_tau(const CanonicalEquation& eq, long steps,
                     long check_order = kDefaultTauCheckOrder);

// det H_n of the starting equation's series for n = 0..n_max, computed by
// walking the composed relations down the trace and evaluating only the
// remaining small determinants on the last reachable equation directly.
std::vector<Rat> replay_trace(const TauTrace& trace, long n_max);

// -- periodicity ------------------------------------------------------------

// Two equal equations in the trace, and every later pair at the same
// distance also equal: positions start, start+period, ... repeat exactly.
struct ExactCycle {
  std::size_t start = 0;
  std::size_t period = 0;
};

// One scalar slot fitted as a ratio of polynomials in the instance index j.
struct IndexFit {
  Polynomial num, den;  // polynomials in j; den nonzero on the fitted range

  Rat eval(long j) const;
  std::string str() const;
};

// Fitted shape of the equations at positions start + r + j*period for one
// residue r: fixed (d, k) plus per-coefficient fits of u and v.
struct EquationPattern {
  long d = 0;
  long k = 1;
  std::vector<IndexFit> u_num, u_den, v_num, v_den;

  CanonicalEquation instantiate(long j) const;
};

struct FamilyFit {
  std::size_t start = 0;
  std::size_t period = 0;
  // Steps with a positive index offset inside one period (the number of
  // genuinely distinct stages; pure rescaling steps are excluded).
  std::size_t shifted_steps_per_period = 0;
  std::vector<EquationPattern> patterns;  // one per residue
  std::size_t instances = 0;              // instances per residue used
};

struct PeriodicityReport {
  std::optional<ExactCycle> exact;
  std::optional<FamilyFit> family;

  bool none() const { return !exact && !family; }
};

// Exact-cycle detection plus the heuristic family fit: every coefficient of
// every residue's equations is interpolated exactly as a ratio of low-degree
// polynomials in the instance index and the fit verified on at least two
// held-out instances. Absence of a pattern is a valid result.
PeriodicityReport detect_periodicity(const TauTrace& trace);

}  // namespace hankelforge
