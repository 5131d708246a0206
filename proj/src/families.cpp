#include "hankelforge/families.hpp"

#include <stdexcept>

#include "hankelforge/errors.hpp"

namespace hankelforge {

NamedFamily catalan_family() {
  QuadraticFamily q{"catalan",
                    Polynomial::constant(Rat(1)),   // w = 1
                    Polynomial::constant(Rat(-1)),  // u = -1
                    Polynomial::monomial(1),        // v = x
                    1};
  return {q, [](long n) { return catalan_convolution(1, n); }};
}

NamedFamily motzkin_family() {
  QuadraticFamily q{"motzkin",
                    Polynomial::constant(Rat(1)),  // w = 1
                    Polynomial{Rat(-1), Rat(1)},   // u = x - 1
                    Polynomial::monomial(2),       // v = x^2
                    2};
  return {q, [](long n) { return motzkin_number(n); }};
}

NamedFamily generalized_catalan_family() {
  QuadraticFamily q{"generalized-catalan",
                    Polynomial::constant(Rat(1)),  // w = 1
                    Polynomial{Rat(-1), Rat(1)},   // u = x - 1
                    Polynomial::monomial(3),       // v = x^3
                    3};
  return {q, {}};
}

QuadraticFamily custom_family(Polynomial w, Polynomial u, Polynomial v) {
  std::optional<long> a;
  if (w == Polynomial::constant(Rat(1)) && !v.is_zero()) {
    long d = v.degree();
    if (d >= 1 && v == Polynomial::monomial(d)) a = d;
  }
  QuadraticFamily fam{"custom", std::move(w), std::move(u), std::move(v), a};
  fam.validate();
  return fam;
}

NamedFamily family_by_name(const std::string& name) {
  if (name == "catalan") return catalan_family();
  if (name == "motzkin") return motzkin_family();
  if (name == "generalized-catalan" || name == "generalized_catalan")
    return generalized_catalan_family();
  throw std::invalid_argument("unknown family '" + name +
                              "' (expected catalan, motzkin, generalized-catalan or custom)");
}

Rat catalan_convolution(long k, long n) {
  if (k < 1 || n < 0) throw std::invalid_argument("catalan_convolution: k >= 1, n >= 0");
  Rat r = Rat(k) / Rat(n + k) * Rat(binomial(Int(2 * n + k - 1), static_cast<unsigned long>(n)));
  if (!is_integer(r)) throw std::logic_error("catalan_convolution: non-integer value");
  return r;
}

Rat motzkin_number(long n) {
  if (n < 0) throw std::invalid_argument("motzkin_number: n >= 0");
  Rat acc(0);
  for (long i = 0; 2 * i <= n; ++i) {
    acc += Rat(binomial(Int(n), static_cast<unsigned long>(2 * i)) *
               binomial(Int(2 * i), static_cast<unsigned long>(i))) /
           Rat(i + 1);
  }
  if (!is_integer(acc)) throw std::logic_error("motzkin_number: non-integer value");
  return acc;
}

Polynomial chebyshev_t(long k) {
  if (k < 1) throw std::invalid_argument("chebyshev_t: k >= 1");
  Polynomial prev{Rat(1)};         // T_0 = 1
  Polynomial cur = Polynomial::monomial(1);  // T_1 = x
  const Polynomial two_x = Polynomial::monomial(1, Rat(2));
  for (long i = 2; i <= k; ++i) {
    Polynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial motzkin_lucas_via_chebyshev(long k) {
  if (k < 1) throw std::invalid_argument("motzkin_lucas_via_chebyshev: k >= 1");
  // T_k((x-1)/(2x)) has denominator (2x)^k at worst; multiplying by
  // 2 (-x)^k clears it, leaving a polynomial:
  //   2 (-1)^k sum_j c_j (x-1)^j x^(k-j) / 2^j.
  const Polynomial t = chebyshev_t(k);
  const Polynomial x_minus_1{Rat(-1), Rat(1)};
  Polynomial acc;
  Polynomial pw = Polynomial::constant(Rat(1));  // (x-1)^j
  Rat half_pow(1);                               // 2^-j
  for (long j = 0; j <= t.degree(); ++j) {
    Rat c = t.coeff(j);
    if (c != 0) acc += pw.shifted_up(k - j) * (c * half_pow);
    pw *= x_minus_1;
    half_pow /= 2;
  }
  acc *= Rat(2 * neg_one_pow(k));
  return acc;
}

ClosedFormId closed_form_id(const std::string& name) {
  if (name == "d33") return ClosedFormId::d33;
  if (name == "d21") return ClosedFormId::d21;
  if (name == "d22") return ClosedFormId::d22;
  if (name == "d23") return ClosedFormId::d23;
  throw UnknownFamilyId("unknown closed-form id '" + name + "' (expected d33, d21, d22, d23)");
}

std::string to_string(ClosedFormId id) {
  switch (id) {
    case ClosedFormId::d33: return "d33";
    case ClosedFormId::d21: return "d21";
    case ClosedFormId::d22: return "d22";
    case ClosedFormId::d23: return "d23";
  }
  return "?";
}

HankelQuery closed_form_query(ClosedFormId id) {
  switch (id) {
    case ClosedFormId::d33: return {3, -3, 0};
    case ClosedFormId::d21: return {2, -1, 0};
    case ClosedFormId::d22: return {2, -2, 0};
    case ClosedFormId::d23: return {2, -3, 0};
  }
  throw UnknownFamilyId("bad closed-form id");
}

Rat closed_form_det(ClosedFormId id, long n) {
  if (n < 0) throw std::invalid_argument("closed_form_det: n >= 0");
  switch (id) {
    case ClosedFormId::d33: {
      if (n == 0) return Rat(1);
      switch (n % 3) {
        case 1: return Rat((n - 1) / 3);   // n = 3k+1 -> k
        case 2: return Rat(0);             // n = 3k+2 -> 0
        default: return Rat(-(n / 3 - 1)); // n = 3k+3 -> -k
      }
    }
    case ClosedFormId::d21: {
      switch (n % 4) {
        case 0: return Rat(1);
        case 2: return Rat(-1);
        default: return Rat(0);
      }
    }
    case ClosedFormId::d22: {
      long r = n % 12;
      if (r == 0 || r == 9 || r == 10 || r == 11) return Rat(1);
      if (r >= 3 && r <= 6) return Rat(-1);
      return Rat(0);
    }
    case ClosedFormId::d23: {
      // The formula branch starts at n = 4; the first four values come from
      // direct determinant evaluation.
      if (n <= 3) {
        static const long small[4] = {1, 0, 0, 0};
        return Rat(small[n]);
      }
      long r = n % 12;
      long k = n / 12;
      switch (r) {
        case 0: case 4: return Rat(1);
        case 2: case 8: return Rat(0);
        case 6: case 10: return Rat(-1);
        case 1: return Rat(8 * k);
        case 3: return Rat(-8 * k);
        case 5: return Rat(8 * k + 2);
        case 7: return Rat(-8 * k - 4);
        case 9: return Rat(8 * k + 4);
        default: return Rat(-8 * k - 6);  // r == 11
      }
    }
  }
  throw UnknownFamilyId("bad closed-form id");
}

IdentityReport verify_closed_form(ClosedFormId id, long n_max) {
  if (n_max < 1) throw std::invalid_argument("verify_closed_form: n_max >= 1");
  HankelQuery q = closed_form_query(id);
  PowerSeries f = motzkin_family().quad.solve(min_truncation(q.M, n_max));
  std::vector<Rat> direct = det_sequence(f, q.K, q.M, n_max);

  IdentityReport report{"closed-form-" + to_string(id), {}};
  for (long n = 0; n <= n_max; ++n) {
    IdentityInstance inst;
    inst.params = to_string(id) + " n=" + std::to_string(n);
    Rat expect = closed_form_det(id, n);
    const Rat& got = direct[static_cast<std::size_t>(n)];
    inst.lhs = to_string(got);
    inst.rhs = to_string(expect);
    inst.status = got == expect ? CheckStatus::holds : CheckStatus::fails;
    report.instances.push_back(std::move(inst));
  }
  return report;
}

}  // namespace hankelforge
