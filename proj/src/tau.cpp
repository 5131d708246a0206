#include "hankelforge/tau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hankelforge/errors.hpp"
#include "hankelforge/hankel.hpp"

namespace hankelforge {

void CanonicalEquation::validate() const {
  if (d < 0) throw NotCanonicalizable("canonical form needs d >= 0");
  if (k < 1) throw NotCanonicalizable("canonical form needs k >= 1");
  if (u.is_zero() || u.at_zero() == 0)
    throw NotCanonicalizable("canonical form needs u(0) != 0");
  if (v.is_zero() || v.at_zero() == 0)
    throw NotCanonicalizable("canonical form needs v(0) != 0");
}

PowerSeries CanonicalEquation::series(long truncation) const {
  validate();
  if (truncation < 1) throw std::invalid_argument("truncation must be positive");
  long t = std::max(truncation, d + 1);
  // x^k v F^2 + u F - x^d = 0, solvable because (x^k v)(0) = 0, u(0) != 0.
  PowerSeries w = -PowerSeries::from_polynomial(Polynomial::monomial(d), t);
  PowerSeries f = solve_quadratic_series(w, u.to_series(t), v.shifted_up(k).to_series(t));
  if (valuation(f) != d)
    throw NotCanonicalizable("canonical series does not have valuation d = " + std::to_string(d));
  return f.truncated(truncation);
}

std::string CanonicalEquation::str() const {
  std::ostringstream os;
  os << "F = x^" << d << " / (u + x^" << k << " v F),  u = " << u.str()
     << ",  v = " << v.str();
  return os.str();
}

std::string to_string(TauCase c) {
  switch (c) {
    case TauCase::i: return "i";
    case TauCase::ii: return "ii";
    case TauCase::iii: return "iii";
  }
  return "?";
}

std::string DetRelation::str() const {
  std::ostringstream os;
  os << "case " << to_string(tag) << ": det H_{n-" << offset << "}(after) = ";
  if (sign < 0) os << "-";
  if (scale_base != 1) os << "(" << scale_base.get_str() << ")^n * ";
  os << "det H_n(before)";
  return os.str();
}

const CanonicalEquation& TauTrace::equation_at(std::size_t pos) const {
  if (pos == 0) return start;
  if (pos > steps.size()) throw std::out_of_range("trace position past end");
  return steps[pos - 1].eq;
}

CanonicalEquation canonicalize(const RationalFunction& a, const RationalFunction& b,
                               const RationalFunction& c, long check_order) {
  if (a.is_zero()) throw NotCanonicalizable("quadratic coefficient a vanishes");
  if (c.is_zero()) throw NotCanonicalizable("constant coefficient c vanishes");
  if (b.at_zero() == 0)
    throw NotCanonicalizable("b(0) = 0: no unique power-series solution");

  RationalFunction minus_c = -c;
  long d = *minus_c.valuation();
  RationalFunction chat = minus_c.shifted_down(d);  // unit at 0 by construction
  RationalFunction u = b / chat;
  RationalFunction av = a / chat;
  long k = *av.valuation();
  if (k < 1)
    throw NotCanonicalizable("a/chat has valuation 0, no x^k factor with k >= 1");
  CanonicalEquation eq{d, k, u, av.shifted_down(k)};
  eq.validate();

  if (check_order > 0) {
    // The canonical solution must solve the original quadratic.
    PowerSeries f = eq.series(check_order);
    PowerSeries residual =
        a.to_series(check_order) * f * f + b.to_series(check_order) * f + c.to_series(check_order);
    if (!residual.is_zero())
      throw std::logic_error("canonicalize: series does not satisfy the input quadratic");
  }
  return eq;
}

std::pair<Polynomial, RationalFunction> decompose_u(const RationalFunction& u, long d) {
  if (u.at_zero() == 0) throw std::invalid_argument("decompose_u needs u(0) != 0");
  PowerSeries head = u.to_series(d + 2);
  Polynomial u_low{std::vector<Rat>(head.coeffs().begin(), head.coeffs().end())};
  RationalFunction diff = u - RationalFunction(u_low);
  RationalFunction u_high = diff.is_zero() ? RationalFunction() : diff.shifted_down(d + 2);
  return {std::move(u_low), std::move(u_high)};
}

namespace {

RationalFunction x_power(long e, const Rat& c) {
  return RationalFunction(Polynomial::monomial(e, c));
}

// Unique power-series solution of aq G^2 + bq G + cq = 0, with val(aq) >= 1
// and bq(0) != 0, expanded to `truncation` terms.
PowerSeries solve_rf_quadratic(const RationalFunction& aq, const RationalFunction& bq,
                               const RationalFunction& cq, long truncation) {
  return solve_quadratic_series(cq.to_series(truncation), bq.to_series(truncation),
                                aq.to_series(truncation));
}

}  // namespace

std::pair<CanonicalEquation, DetRelation> tau_step(const CanonicalEquation& eq,
                                                   long check_order) {
  eq.validate();
  const Rat u0 = eq.u.at_zero();

  if (u0 != 1) {
    // Rescaling move: G = u(0) F solves the same-shape equation with
    // coefficients u/u(0) and v/u(0)^2.
    Rat inv = 1 / u0;
    CanonicalEquation next{eq.d, eq.k, inv * eq.u, (inv * inv) * eq.v};
    next.validate();
    DetRelation rel{TauCase::i, 0, 1, u0};
    if (check_order > 0) {
      if (!(u0 * eq.series(check_order) == next.series(check_order)))
        throw std::logic_error("tau case i: series transform law violated");
    }
    return {std::move(next), rel};
  }

  auto [u_low, u_high] = decompose_u(eq.u, eq.d);
  const RationalFunction ul{u_low};
  // Shared denominator of the transformed equation: u_L - x^{d+2} u_H.
  const RationalFunction b_next = ul - u_high.shifted_up(eq.d + 2);
  const int sgn = binom2_sign(eq.d + 1);

  if (eq.k == 1) {
    // G (u_L - x^{d+2} u_H - x^{d+1} G) = -v - x u_L u_H, followed by the
    // substitution G = x H + G(0); the step returns H.
    RationalFunction a_g = x_power(eq.d + 1, Rat(-1));
    RationalFunction c_g = eq.v + (ul * u_high).shifted_up(1);
    // G(0) read off from one series coefficient of the defining relation.
    Rat g0 = solve_rf_quadratic(a_g, b_next, c_g, 1).at(0);

    RationalFunction a_h = a_g.shifted_up(2);
    RationalFunction b_h = ((Rat(2) * g0) * a_g + b_next).shifted_up(1);
    RationalFunction c_h = (g0 * g0) * a_g + g0 * b_next + c_g;
    if (c_h.is_zero())
      throw NotCanonicalizable("tau case ii: transformed series is zero");
    long strip = std::min({*a_h.valuation(), *b_h.valuation(), *c_h.valuation()});
    CanonicalEquation next = canonicalize(a_h.shifted_down(strip), b_h.shifted_down(strip),
                                          c_h.shifted_down(strip), check_order);
    DetRelation rel{TauCase::ii, eq.d + 1, sgn, Rat(1)};
    if (check_order > 0) {
      PowerSeries g = solve_rf_quadratic(a_g, b_next, c_g, check_order + 1);
      std::vector<Rat> shifted(g.coeffs().begin() + 1, g.coeffs().end());
      if (!(next.series(check_order) == PowerSeries(std::move(shifted))))
        throw std::logic_error("tau case ii: series transform law violated");
    }
    return {std::move(next), rel};
  }

  // Case iii: G (u_L - x^{d+2} u_H - x^{d+2} G) = -x^{k-2} v - u_L u_H.
  RationalFunction a_g = x_power(eq.d + 2, Rat(-1));
  RationalFunction c_g = eq.v.shifted_up(eq.k - 2) + ul * u_high;
  if (c_g.is_zero())
    throw NotCanonicalizable("tau case iii: transformed series is zero");
  // canonicalize re-checks that the result's series solves this quadratic,
  // which is exactly the case-iii transform law.
  CanonicalEquation next = canonicalize(a_g, b_next, c_g, check_order);
  DetRelation rel{TauCase::iii, eq.d + 1, sgn, Rat(1)};
  return {std::move(next), rel};
}

TauTrace iterate_tau(const CanonicalEquation& eq, long steps, long check_order) {
  if (steps < 1) throw std::invalid_argument("iterate_tau needs steps >= 1");
  eq.validate();
  TauTrace trace{eq, {}, ""};
  CanonicalEquation cur = eq;
  for (long i = 0; i < steps; ++i) {
    try {
      auto [next, rel] = tau_step(cur, check_order);
      trace.steps.push_back({next, rel});
      cur = std::move(next);
    } catch (const NotCanonicalizable& e) {
      trace.stop_reason =
          "stopped before step " + std::to_string(i + 1) + ": " + e.what();
      break;
    }
  }
  return trace;
}

std::vector<Rat> replay_trace(const TauTrace& trace, long n_max) {
  if (n_max < 0) throw std::invalid_argument("replay_trace needs n_max >= 0");
  const std::size_t n_steps = trace.steps.size();

  // Walk each order down the chain:
  //   det H_n(before) = det H_{n-offset}(after) / (sign * base^n),
  // stopping when the next offset overshoots; note the residual order and
  // position where a direct evaluation is needed.
  struct Plan {
    std::size_t pos;
    long order;
    Rat factor;
  };
  std::vector<Plan> plan;
  plan.reserve(static_cast<std::size_t>(n_max) + 1);
  std::vector<long> max_order(n_steps + 1, -1);
  for (long n = 0; n <= n_max; ++n) {
    long cur = n;
    Rat factor(1);
    std::size_t t = 0;
    while (t < n_steps) {
      const DetRelation& rel = trace.steps[t].rel;
      if (cur < rel.offset) break;
      factor /= Rat(rel.sign) * rat_pow(rel.scale_base, cur);
      cur -= rel.offset;
      ++t;
    }
    plan.push_back({t, cur, std::move(factor)});
    max_order[t] = std::max(max_order[t], cur);
  }

  // Direct determinant sequences at the positions actually reached.
  std::vector<std::vector<Rat>> base(n_steps + 1);
  for (std::size_t t = 0; t <= n_steps; ++t) {
    if (max_order[t] < 0) continue;
    const CanonicalEquation& e = trace.equation_at(t);
    PowerSeries f = e.series(min_truncation(0, max_order[t]));
    base[t] = det_sequence(f, 1, 0, max_order[t]);
  }

  std::vector<Rat> out;
  out.reserve(plan.size());
  for (const Plan& p : plan)
    out.push_back(p.factor * base[p.pos][static_cast<std::size_t>(p.order)]);
  return out;
}

// -- periodicity --------------------------------------------------------------

Rat IndexFit::eval(long j) const {
  Rat dv = den(Rat(j));
  if (dv == 0) throw std::domain_error("index fit denominator vanishes at " + std::to_string(j));
  return num(Rat(j)) / dv;
}

std::string IndexFit::str() const {
  if (den.is_one()) return num.str("j");
  return "(" + num.str("j") + ") / (" + den.str("j") + ")";
}

CanonicalEquation EquationPattern::instantiate(long j) const {
  auto build = [&](const std::vector<IndexFit>& fits) {
    std::vector<Rat> cs;
    cs.reserve(fits.size());
    for (const auto& f : fits) cs.push_back(f.eval(j));
    return Polynomial{std::move(cs)};
  };
  CanonicalEquation eq{d, k, RationalFunction(build(u_num), build(u_den)),
                       RationalFunction(build(v_num), build(v_den))};
  eq.validate();
  return eq;
}

namespace {

// A nontrivial nullspace vector of the given rational matrix, or empty if
// the kernel is trivial.
std::vector<Rat> nullspace_vector(std::vector<std::vector<Rat>> rows, std::size_t unknowns) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rat inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (std::size_t j = c; j < unknowns; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(unknowns, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::size_t free_col = unknowns;
  for (std::size_t c = 0; c < unknowns; ++c)
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  if (free_col == unknowns) return {};
  std::vector<Rat> sol(unknowns, Rat(0));
  sol[free_col] = 1;
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) sol[pivot_cols[i]] = -rows[i][free_col];
  return sol;
}

// Fit ys[j] = P(j)/Q(j) with deg P <= dp, deg Q <= dq: solve on the first
// dp+dq+1 samples, then demand exact agreement on every remaining sample
// (at least two of them).
std::optional<IndexFit> fit_rational_slot(const std::vector<Rat>& ys, long dp, long dq) {
  const long m = static_cast<long>(ys.size());
  const long fit_pts = dp + dq + 1;
  if (m < fit_pts + 2) return std::nullopt;

  const std::size_t unknowns = static_cast<std::size_t>(dp + dq + 2);
  std::vector<std::vector<Rat>> rows;
  rows.reserve(static_cast<std::size_t>(fit_pts));
  for (long j = 0; j < fit_pts; ++j) {
    std::vector<Rat> row(unknowns, Rat(0));
    Rat p(1);
    for (long r = 0; r <= dp; ++r) {
      row[static_cast<std::size_t>(r)] = p;
      p *= j;
    }
    Rat q(1);
    for (long s = 0; s <= dq; ++s) {
      row[static_cast<std::size_t>(dp + 1 + s)] = -ys[static_cast<std::size_t>(j)] * q;
      q *= j;
    }
    rows.push_back(std::move(row));
  }
  std::vector<Rat> sol = nullspace_vector(std::move(rows), unknowns);
  if (sol.empty()) return std::nullopt;

  Polynomial num{std::vector<Rat>(sol.begin(), sol.begin() + dp + 1)};
  Polynomial den{std::vector<Rat>(sol.begin() + dp + 1, sol.end())};
  if (den.is_zero()) return std::nullopt;
  Polynomial g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  Rat lead = den.leading();
  num /= lead;
  den /= lead;

  for (long j = 0; j < m; ++j) {
    Rat dv = den(Rat(j));
    if (dv == 0) return std::nullopt;
    if (num(Rat(j)) != ys[static_cast<std::size_t>(j)] * dv) return std::nullopt;
  }
  return IndexFit{std::move(num), std::move(den)};
}

std::optional<IndexFit> fit_slot(const std::vector<Rat>& ys) {
  static constexpr std::pair<long, long> kDegreePairs[] = {
      {0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}, {2, 2}};
  for (auto [dp, dq] : kDegreePairs)
    if (auto f = fit_rational_slot(ys, dp, dq)) return f;
  return std::nullopt;
}

std::optional<FamilyFit> try_family_fit(const TauTrace& trace, std::size_t start,
                                        std::size_t period) {
  const std::size_t last = trace.steps.size();
  std::vector<EquationPattern> patterns;
  std::size_t min_instances = static_cast<std::size_t>(-1);

  for (std::size_t r = 0; r < period; ++r) {
    std::vector<const CanonicalEquation*> inst;
    for (std::size_t pos = start + r; pos <= last; pos += period)
      inst.push_back(&trace.equation_at(pos));
    if (inst.size() < 3) return std::nullopt;

    EquationPattern pat;
    pat.d = inst[0]->d;
    pat.k = inst[0]->k;
    for (const auto* e : inst)
      if (e->d != pat.d || e->k != pat.k) return std::nullopt;

    auto fit_all = [&](auto&& poly_of, std::vector<IndexFit>& out) -> bool {
      long maxdeg = -1;
      for (const auto* e : inst) maxdeg = std::max(maxdeg, poly_of(*e).degree());
      if (maxdeg < 0) return false;
      for (long c = 0; c <= maxdeg; ++c) {
        std::vector<Rat> ys;
        ys.reserve(inst.size());
        for (const auto* e : inst) ys.push_back(poly_of(*e).coeff(c));
        auto f = fit_slot(ys);
        if (!f) return false;
        out.push_back(std::move(*f));
      }
      return true;
    };

    if (!fit_all([](const CanonicalEquation& e) -> const Polynomial& { return e.u.num(); },
                 pat.u_num) ||
        !fit_all([](const CanonicalEquation& e) -> const Polynomial& { return e.u.den(); },
                 pat.u_den) ||
        !fit_all([](const CanonicalEquation& e) -> const Polynomial& { return e.v.num(); },
                 pat.v_num) ||
        !fit_all([](const CanonicalEquation& e) -> const Polynomial& { return e.v.den(); },
                 pat.v_den))
      return std::nullopt;

    patterns.push_back(std::move(pat));
    min_instances = std::min(min_instances, inst.size());
  }

  std::size_t shifted = 0;
  for (std::size_t s = start + 1; s <= start + period && s <= last; ++s)
    if (trace.steps[s - 1].rel.offset > 0) ++shifted;

  return FamilyFit{start, period, shifted, std::move(patterns), min_instances};
}

}  // namespace

PeriodicityReport detect_periodicity(const TauTrace& trace) {
  PeriodicityReport rep;
  const std::size_t last = trace.steps.size();  // positions run 0..last
  if (last < 2) return rep;

  // Exact repetition: smallest period first, and the match must persist
  // through the whole remaining trace.
  for (std::size_t period = 1; period <= last && !rep.exact; ++period) {
    for (std::size_t start = 0; start + period <= last; ++start) {
      bool all = true;
      for (std::size_t i = start; i + period <= last && all; ++i)
        if (!(trace.equation_at(i) == trace.equation_at(i + period))) all = false;
      if (all) {
        rep.exact = ExactCycle{start, period};
        break;
      }
    }
  }

  for (std::size_t period = 1; 3 * period <= last + 1 && !rep.family; ++period) {
    for (std::size_t start = 0; start + 3 * period <= last + 1; ++start) {
      if (auto fit = try_family_fit(trace, start, period)) {
        rep.family = std::move(fit);
        break;
      }
    }
  }
  return rep;
}

}  // namespace hankelforge
