#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hankelforge/errors.hpp"
#include "hankelforge/families.hpp"
#include "hankelforge/hankel.hpp"
#include "hankelforge/identities.hpp"
#include "hankelforge/parsing.hpp"
#include "hankelforge/tau.hpp"

namespace hf = hankelforge;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityViolation = 1;
constexpr int kExitValidation = 2;
constexpr int kExitTruncation = 3;

enum class Format { plain, csv, json };

Format parse_format(const std::string& s) {
  if (s == "plain") return Format::plain;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + s + "'");
}

std::string coeff_list(const hf::Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long i = 0; i <= p.degree(); ++i) {
    if (i) out += ",";
    out += hf::to_string(p.coeff(i));
  }
  return out;
}

ordered_json rational_function_json(const hf::RationalFunction& r) {
  return ordered_json{{"num", coeff_list(r.num())}, {"den", coeff_list(r.den())}};
}

ordered_json equation_json(const hf::CanonicalEquation& eq) {
  return ordered_json{{"d", eq.d},
                      {"k", eq.k},
                      {"u", rational_function_json(eq.u)},
                      {"v", rational_function_json(eq.v)}};
}

struct FamilyOpts {
  std::string name;
  std::string w, u, v;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", name,
                    "catalan, motzkin, generalized-catalan, or custom (with --w/--u/--v)");
    cmd->add_option("--w", w, "custom family w coefficients, ascending degree (default 1)");
    cmd->add_option("--u", u, "custom family u coefficients, ascending degree");
    cmd->add_option("--v", v, "custom family v coefficients, ascending degree");
  }

  hf::QuadraticFamily resolve() const {
    bool has_custom = !w.empty() || !u.empty() || !v.empty();
    if (!name.empty() && name != "custom") {
      if (has_custom)
        throw std::invalid_argument("--w/--u/--v only apply to --family custom");
      return hf::family_by_name(name).quad;
    }
    if (name.empty() && !has_custom)
      throw std::invalid_argument("pick --family or give custom --u/--v coefficients");
    if (u.empty() || v.empty())
      throw std::invalid_argument("a custom family needs --u and --v");
    hf::Polynomial pw =
        w.empty() ? hf::Polynomial::constant(hf::Rat(1)) : hf::parse_polynomial(w);
    return hf::custom_family(pw, hf::parse_polynomial(u), hf::parse_polynomial(v));
  }
};

void print_value_table(const std::vector<hf::Rat>& values, Format fmt, const char* column,
                       ordered_json header) {
  if (fmt == Format::json) {
    ordered_json out = std::move(header);
    ordered_json rows = ordered_json::array();
    for (std::size_t n = 0; n < values.size(); ++n)
      rows.push_back(ordered_json{{"n", n}, {column, hf::to_string(values[n])}});
    out["values"] = std::move(rows);
    std::cout << out.dump() << "\n";
    return;
  }
  if (fmt == Format::csv) std::cout << "n," << column << "\n";
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (fmt == Format::csv)
      std::cout << n << "," << hf::to_string(values[n]) << "\n";
    else
      std::cout << n << "\t" << hf::to_string(values[n]) << "\n";
  }
}

// ---- series ----------------------------------------------------------------

struct SeriesArgs {
  FamilyOpts family;
  long power = 1;
  long terms = 0;
  std::string format = "plain";
};

int run_series(const SeriesArgs& args) {
  if (args.terms < 1) throw std::invalid_argument("--terms must be >= 1");
  if (args.power < 1) throw std::invalid_argument("--power must be >= 1");
  hf::QuadraticFamily fam = args.family.resolve();
  hf::PowerSeries f = fam.solve(args.terms);
  hf::PowerSeries p = args.power == 1 ? f : f.pow(args.power);
  std::vector<hf::Rat> values;
  values.reserve(static_cast<std::size_t>(args.terms));
  for (long n = 0; n < args.terms; ++n) values.push_back(p.at(n));
  print_value_table(values, parse_format(args.format), "coeff",
                    ordered_json{{"family", fam.name}, {"K", args.power}});
  return kExitOk;
}

// ---- det -------------------------------------------------------------------

struct DetArgs {
  FamilyOpts family;
  long power = 1;
  long shift = 0;
  long n_max = 10;
  long precision = 0;  // 0 = auto
  std::string format = "plain";
};

int run_det(const DetArgs& args) {
  if (args.power < 1) throw std::invalid_argument("--power must be >= 1");
  if (args.n_max < 0) throw std::invalid_argument("--n-max must be >= 0");
  hf::QuadraticFamily fam = args.family.resolve();
  long trunc = args.precision > 0 ? args.precision : hf::min_truncation(args.shift, args.n_max);
  hf::PowerSeries f = fam.solve(trunc);
  std::vector<hf::Rat> dets = hf::det_sequence(f, args.power, args.shift, args.n_max);
  print_value_table(dets, parse_format(args.format), "det",
                    ordered_json{{"K", args.power}, {"M", args.shift}});
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string target;
  long k_max = -1;
  long m_max = -1;
  long n_max = -1;
  long count = 100;
  long precision = 0;
  unsigned long long seed = 1;
  std::string format = "plain";
};

// Deterministic generator, same scheme as the test suites.
class SplitMix {
 public:
  explicit SplitMix(unsigned long long seed) : state_(seed) {}
  unsigned long long next() {
    unsigned long long z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<unsigned long long>(hi - lo + 1));
  }

 private:
  unsigned long long state_;
};

int emit_reports(const std::vector<hf::IdentityReport>& reports, const std::string& target,
                 Format fmt) {
  std::size_t total = 0, failed = 0;
  for (const auto& rep : reports) {
    total += rep.instances.size();
    failed += rep.failure_count();
  }

  if (fmt == Format::json) {
    ordered_json out{{"target", target}, {"all_hold", failed == 0}};
    ordered_json rows = ordered_json::array();
    for (const auto& rep : reports)
      for (const auto& inst : rep.instances) {
        ordered_json row{{"claim", rep.claim},
                         {"params", inst.params},
                         {"status", hf::to_string(inst.status)}};
        if (!inst.lhs.empty()) row["lhs"] = inst.lhs;
        if (!inst.rhs.empty()) row["rhs"] = inst.rhs;
        rows.push_back(std::move(row));
      }
    out["instances"] = std::move(rows);
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& rep : reports)
      for (const auto& inst : rep.instances) {
        std::cout << (inst.ok() ? "ok   " : "FAIL ") << rep.claim << "  " << inst.params;
        if (inst.status == hf::CheckStatus::vacuous ||
            inst.status == hf::CheckStatus::degree_condition_failed)
          std::cout << "  [" << hf::to_string(inst.status) << "]";
        if (!inst.ok()) std::cout << "  lhs=" << inst.lhs << "  rhs=" << inst.rhs;
        std::cout << "\n";
      }
    std::cout << (failed == 0 ? "PASS" : "FAIL") << ": " << total - failed << "/" << total
              << " instances hold (" << target << ")\n";
  }
  return failed == 0 ? kExitOk : kExitIdentityViolation;
}

int run_verify(const VerifyArgs& args) {
  Format fmt = parse_format(args.format);
  std::vector<hf::IdentityReport> reports;

  auto grid = [&](const hf::QuadraticFamily& fam, long k_max, long m_max, long n_max) {
    for (long k = 1; k <= k_max; ++k)
      for (long m = 0; m <= m_max; ++m)
        for (hf::Parity p : {hf::Parity::even, hf::Parity::odd})
          reports.push_back(hf::check_shift_reflection(fam, k, m, p, n_max));
  };

  if (args.target == "cigler") {
    grid(hf::catalan_family().quad, args.k_max < 0 ? 3 : args.k_max,
         args.m_max < 0 ? 3 : args.m_max, args.n_max < 0 ? 8 : args.n_max);
  } else if (args.target == "motzkin") {
    grid(hf::motzkin_family().quad, args.k_max < 0 ? 3 : args.k_max,
         args.m_max < 0 ? 3 : args.m_max, args.n_max < 0 ? 8 : args.n_max);
  } else if (args.target == "cigler-st") {
    long m_max = args.m_max < 0 ? 4 : args.m_max;
    long n_max = args.n_max < 0 ? 6 : args.n_max;
    SplitMix rng(args.seed);
    long trunc = 2 * n_max + m_max + 2;
    for (long it = 0; it < args.count; ++it) {
      std::vector<hf::Rat> c{hf::Rat(1)};
      long deg = rng.range(0, 6);
      for (long i = 1; i <= deg; ++i) c.emplace_back(rng.range(-9, 9));
      hf::PowerSeries s = hf::PowerSeries::from_polynomial(hf::Polynomial(std::move(c)), trunc);
      for (long m = 0; m <= m_max; ++m)
        for (long n = 0; n <= n_max; ++n) {
          hf::IdentityReport rep = hf::check_cigler_st(s, m, n);
          rep.instances[0].params = "poly#" + std::to_string(it) + " " + rep.instances[0].params;
          reports.push_back(std::move(rep));
        }
    }
  } else if (args.target == "convolution") {
    long k_max = args.k_max < 0 ? 8 : args.k_max;
    long trunc = args.precision > 0 ? args.precision : 30;
    for (const auto& fam : {hf::catalan_family().quad, hf::motzkin_family().quad,
                            hf::generalized_catalan_family().quad})
      for (long k = 1; k <= k_max; ++k)
        reports.push_back(hf::check_convolution_identity(fam, k, trunc));
  } else if (args.target == "closed-forms") {
    long n_max = args.n_max < 0 ? 40 : args.n_max;
    for (auto id : {hf::ClosedFormId::d33, hf::ClosedFormId::d21, hf::ClosedFormId::d22,
                    hf::ClosedFormId::d23})
      reports.push_back(hf::verify_closed_form(id, n_max));
  } else if (args.target == "chebyshev") {
    long k_max = args.k_max < 0 ? 12 : args.k_max;
    hf::IdentityReport rep{"motzkin-lucas-chebyshev", {}};
    hf::QuadraticFamily mot = hf::motzkin_family().quad;
    for (long k = 1; k <= k_max; ++k) {
      hf::IdentityInstance inst;
      inst.params = "k=" + std::to_string(k);
      hf::Polynomial via = hf::motzkin_lucas_via_chebyshev(k);
      hf::Polynomial direct = hf::lucas_polynomial(mot, k);
      inst.lhs = via.str();
      inst.rhs = direct.str();
      inst.status = via == direct ? hf::CheckStatus::holds : hf::CheckStatus::fails;
      rep.instances.push_back(std::move(inst));
    }
    reports.push_back(std::move(rep));
  } else {
    throw std::invalid_argument(
        "unknown verify target '" + args.target +
        "' (expected cigler, motzkin, cigler-st, convolution, closed-forms, chebyshev)");
  }
  return emit_reports(reports, args.target, fmt);
}

// ---- tau -------------------------------------------------------------------

struct TauArgs {
  std::string a, b, c;
  std::string fixture;
  long steps = 6;
  long n_max = 12;
  long precision = 0;  // series check order, 0 = default
  std::string format = "plain";
};

ordered_json periodicity_json(const hf::PeriodicityReport& rep) {
  ordered_json out;
  if (rep.exact)
    out["exact"] = ordered_json{{"start", rep.exact->start}, {"period", rep.exact->period}};
  if (rep.family) {
    ordered_json fam{{"start", rep.family->start},
                     {"period", rep.family->period},
                     {"shifted_steps_per_period", rep.family->shifted_steps_per_period},
                     {"instances", rep.family->instances}};
    ordered_json pats = ordered_json::array();
    for (const auto& pat : rep.family->patterns) {
      auto fits = [](const std::vector<hf::IndexFit>& fs) {
        ordered_json arr = ordered_json::array();
        for (const auto& f : fs) arr.push_back(f.str());
        return arr;
      };
      pats.push_back(ordered_json{{"d", pat.d},
                                  {"k", pat.k},
                                  {"u_num", fits(pat.u_num)},
                                  {"u_den", fits(pat.u_den)},
                                  {"v_num", fits(pat.v_num)},
                                  {"v_den", fits(pat.v_den)}});
    }
    fam["patterns"] = std::move(pats);
    out["family"] = std::move(fam);
  }
  if (rep.none()) out["none"] = true;
  return out;
}

void print_pattern_plain(const hf::EquationPattern& pat, std::size_t residue) {
  auto join = [](const std::vector<hf::IndexFit>& fs) {
    std::string s;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (i) s += ", ";
      s += fs[i].str();
    }
    return s.empty() ? std::string("0") : s;
  };
  std::cout << "  residue " << residue << ": d=" << pat.d << " k=" << pat.k << "\n"
            << "    u: num coeffs [" << join(pat.u_num) << "], den coeffs [" << join(pat.u_den)
            << "]\n"
            << "    v: num coeffs [" << join(pat.v_num) << "], den coeffs [" << join(pat.v_den)
            << "]\n";
}

int run_tau(const TauArgs& args) {
  if (args.steps < 1) throw std::invalid_argument("--steps must be >= 1");
  if (args.n_max < 0) throw std::invalid_argument("--n-max must be >= 0");

  hf::RationalFunction a, b, c;
  if (!args.fixture.empty()) {
    if (!args.a.empty() || !args.b.empty() || !args.c.empty())
      throw std::invalid_argument("--fixture and --a/--b/--c are mutually exclusive");
    if (args.fixture == "motzkin-cube") {
      a = hf::parse_rational_function("0,0,0,1");
      b = hf::parse_rational_function("-1,3,0,-2");
      c = hf::parse_rational_function("0,0,0,1");
    } else if (args.fixture == "catalan") {
      a = hf::parse_rational_function("0,1");
      b = hf::parse_rational_function("-1");
      c = hf::parse_rational_function("1");
    } else {
      throw std::invalid_argument("unknown fixture '" + args.fixture +
                                  "' (expected motzkin-cube or catalan)");
    }
  } else {
    if (args.a.empty() || args.b.empty() || args.c.empty())
      throw std::invalid_argument("tau needs --a, --b and --c (or --fixture)");
    a = hf::parse_rational_function(args.a);
    b = hf::parse_rational_function(args.b);
    c = hf::parse_rational_function(args.c);
  }

  long check_order = args.precision > 0 ? args.precision : hf::kDefaultTauCheckOrder;
  hf::CanonicalEquation start = hf::canonicalize(a, b, c, check_order);
  hf::TauTrace trace = hf::iterate_tau(start, args.steps, check_order);
  hf::PeriodicityReport periodicity = hf::detect_periodicity(trace);

  std::vector<hf::Rat> replay = hf::replay_trace(trace, args.n_max);
  std::vector<hf::Rat> direct =
      hf::det_sequence(start.series(hf::min_truncation(0, args.n_max)), 1, 0, args.n_max);
  bool match = replay == direct;

  Format fmt = parse_format(args.format);
  if (fmt == Format::json) {
    ordered_json out{{"start", equation_json(start)}};
    ordered_json steps = ordered_json::array();
    for (const auto& st : trace.steps)
      steps.push_back(ordered_json{{"case", hf::to_string(st.rel.tag)},
                                   {"offset", st.rel.offset},
                                   {"sign", st.rel.sign},
                                   {"base", hf::to_string(st.rel.scale_base)},
                                   {"equation", equation_json(st.eq)}});
    out["steps"] = std::move(steps);
    if (!trace.stop_reason.empty()) out["stop_reason"] = trace.stop_reason;
    out["periodicity"] = periodicity_json(periodicity);
    ordered_json rows = ordered_json::array();
    for (std::size_t n = 0; n < replay.size(); ++n)
      rows.push_back(ordered_json{{"n", n},
                                  {"replay", hf::to_string(replay[n])},
                                  {"direct", hf::to_string(direct[n])}});
    out["replay"] = std::move(rows);
    out["replay_matches_direct"] = match;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "start: " << start.str() << "\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const auto& st = trace.steps[i];
      std::cout << "step " << i + 1 << " [" << st.rel.str() << "]\n  -> " << st.eq.str() << "\n";
    }
    if (!trace.stop_reason.empty()) std::cout << trace.stop_reason << "\n";

    if (periodicity.exact)
      std::cout << "exact cycle: start=" << periodicity.exact->start
                << " period=" << periodicity.exact->period << "\n";
    if (periodicity.family) {
      const auto& f = *periodicity.family;
      std::cout << "parameterized family: start=" << f.start << " period=" << f.period
                << " shifted-steps/period=" << f.shifted_steps_per_period
                << " instances=" << f.instances << "\n";
      for (std::size_t r = 0; r < f.patterns.size(); ++r) print_pattern_plain(f.patterns[r], r);
    }
    if (periodicity.none()) std::cout << "periodicity: none detected\n";

    std::cout << "n\treplay\tdirect\tmatch\n";
    for (std::size_t n = 0; n < replay.size(); ++n)
      std::cout << n << "\t" << hf::to_string(replay[n]) << "\t" << hf::to_string(direct[n])
                << "\t" << (replay[n] == direct[n] ? "yes" : "NO") << "\n";
    std::cout << (match ? "PASS" : "FAIL") << ": replayed determinants "
              << (match ? "match" : "do not match") << " direct evaluation\n";
  }
  return match ? kExitOk : kExitIdentityViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hankel determinants of convolution powers of quadratic power series"};
  app.require_subcommand(1);

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "expand a family's convolution power");
  series_args.family.attach(series);
  series->add_option("-K,--power", series_args.power, "convolution power K (default 1)");
  series->add_option("--terms", series_args.terms, "number of coefficients to print")
      ->required()
      ->envname("HANKELFORGE_PRECISION");
  series->add_option("--format", series_args.format, "plain, csv or json");

  DetArgs det_args;
  auto* det = app.add_subcommand("det", "shifted Hankel determinant sequence D_{K,M}(0..n)");
  det_args.family.attach(det);
  det->add_option("-K,--power", det_args.power, "convolution power K (default 1)");
  det->add_option("-M,--shift", det_args.shift, "index shift M (may be negative)");
  det->add_option("--n-max", det_args.n_max, "largest matrix order (default 10)");
  det->add_option("--precision", det_args.precision, "series truncation override")
      ->envname("HANKELFORGE_PRECISION");
  det->add_option("--format", det_args.format, "plain, csv or json");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run an identity-verification grid");
  verify->add_option("target", verify_args.target,
                     "cigler | motzkin | cigler-st | convolution | closed-forms | chebyshev")
      ->required();
  verify->add_option("--k-max", verify_args.k_max, "largest k in the grid");
  verify->add_option("--m-max", verify_args.m_max, "largest m in the grid");
  verify->add_option("--n-max", verify_args.n_max, "largest order in the grid");
  verify->add_option("--count", verify_args.count, "random instances for cigler-st (default 100)");
  verify->add_option("--seed", verify_args.seed, "seed for the randomized suite");
  verify->add_option("--precision", verify_args.precision, "series truncation override")
      ->envname("HANKELFORGE_PRECISION");
  verify->add_option("--format", verify_args.format, "plain or json");

  TauArgs tau_args;
  auto* tau = app.add_subcommand("tau", "iterate the quadratic transformation on a F^2 + b F + c = 0");
  tau->add_option("--a", tau_args.a, "coefficient of F^2: \"num\" or \"num;den\" coefficient lists");
  tau->add_option("--b", tau_args.b, "coefficient of F");
  tau->add_option("--c", tau_args.c, "constant coefficient");
  tau->add_option("--fixture", tau_args.fixture, "motzkin-cube or catalan");
  tau->add_option("--steps", tau_args.steps, "transformation steps (default 6)");
  tau->add_option("--n-max", tau_args.n_max, "orders replayed against direct determinants");
  tau->add_option("--precision", tau_args.precision, "series check order override")
      ->envname("HANKELFORGE_PRECISION");
  tau->add_option("--format", tau_args.format, "plain or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (series->parsed()) return run_series(series_args);
    if (det->parsed()) return run_det(det_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (tau->parsed()) return run_tau(tau_args);
    return kExitValidation;
  } catch (const hf::TruncationExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTruncation;
  } catch (const hf::IndeterminateValuation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTruncation;
  } catch (const hf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
