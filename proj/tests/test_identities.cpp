#include <doctest.h>

#include "hankelforge/errors.hpp"
#include "hankelforge/families.hpp"
#include "hankelforge/identities.hpp"
#include "hankelforge/rational_function.hpp"
#include "oracles.hpp"

using namespace hankelforge;

TEST_CASE("lucas_triangle closed form") {
  CHECK(lucas_triangle(2, 1) == 2);
  CHECK(lucas_triangle(5, 2) == 5);
  CHECK(lucas_triangle(6, 3) == 2);
  CHECK(lucas_triangle(1, 0) == 1);
  for (long k = 1; k <= 12; ++k) CHECK(lucas_triangle(k, 0) == 1);
  // Zero outside the triangle, so the recursion applies at the boundary.
  CHECK(lucas_triangle(4, -1) == 0);
  CHECK(lucas_triangle(4, 3) == 0);
}

TEST_CASE("lucas_triangle closed form equals its recursion") {
  for (long k = 2; k <= 20; ++k)
    for (long i = 0; 2 * i <= k; ++i)
      CHECK(lucas_triangle(k, i) == lucas_triangle(k - 1, i) + lucas_triangle(k - 2, i - 1));
}

TEST_CASE("lucas_polynomial on the built-in families") {
  QuadraticFamily cat = catalan_family().quad;
  QuadraticFamily mot = motzkin_family().quad;
  QuadraticFamily gen = generalized_catalan_family().quad;

  CHECK(lucas_polynomial(mot, 2) == Polynomial({Rat(1), Rat(-2), Rat(-1)}));  // 1 - 2x - x^2
  for (const auto& fam : {cat, mot, gen}) CHECK(lucas_polynomial(fam, 1) == -fam.u);
  CHECK(lucas_polynomial(cat, 3) == Polynomial({Rat(1), Rat(-3)}));  // 1 - 3x

  // L_{k+1} = -u L_k - v w L_{k-1}
  for (const auto& fam : {cat, mot, gen})
    for (long k = 2; k <= 11; ++k)
      CHECK(lucas_polynomial(fam, k + 1) ==
            -fam.u * lucas_polynomial(fam, k) - fam.v * fam.w * lucas_polynomial(fam, k - 1));
}

TEST_CASE("lucas_polynomial degrees") {
  for (long k = 1; k <= 12; ++k) {
    CHECK(lucas_polynomial(catalan_family().quad, k).degree() == k / 2);
    CHECK(lucas_polynomial(motzkin_family().quad, k).degree() == k);
  }
}

TEST_CASE("lucas_polynomial row sums give the Lucas numbers") {
  // With w = -1, u = -1, v = x the signs cancel and L_k = sum_i T(k,i) x^i;
  // at x = 1 that is the k-th Lucas number.
  QuadraticFamily fam{"lucas-probe", Polynomial::constant(Rat(-1)),
                      Polynomial::constant(Rat(-1)), Polynomial::monomial(1), std::nullopt};
  std::vector<Rat> lucas = oracle::lucas_numbers(10);
  for (long k = 1; k <= 10; ++k) {
    Polynomial l = lucas_polynomial(fam, k);
    for (long i = 0; 2 * i <= k; ++i) CHECK(l.coeff(i) == Rat(lucas_triangle(k, i)));
    CHECK(l(Rat(1)) == lucas[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("convolution identity for the built-in families") {
  CHECK(check_convolution_identity(catalan_family().quad, 4, 30).all_hold());
  CHECK(check_convolution_identity(motzkin_family().quad, 1, 30).all_hold());
  CHECK(check_convolution_identity(generalized_catalan_family().quad, 5, 30).all_hold());
}

TEST_CASE("convolution identity at k = 1 is the rearranged defining equation") {
  // v F + w / F = -u.
  QuadraticFamily fam = motzkin_family().quad;
  const long t = 30;
  PowerSeries f = fam.solve(t);
  PowerSeries lhs = PowerSeries::from_polynomial(fam.v, t) * f +
                    PowerSeries::from_polynomial(fam.w, t) * f.inverse();
  CHECK(lhs == PowerSeries::from_polynomial(-fam.u, t));
}

TEST_CASE("convolution identity rejects families with F(0) = 0") {
  QuadraticFamily fam{"zero-constant", Polynomial::monomial(1), Polynomial::constant(Rat(1)),
                      Polynomial::monomial(1), std::nullopt};
  CHECK_THROWS_AS(check_convolution_identity(fam, 2, 10), BadEquation);
}

TEST_CASE("reciprocal-hankel identity, worked instances") {
  // s = 1 + x: both sides equal -1 at M=0, N=1.
  PowerSeries s1 = PowerSeries::from_polynomial(Polynomial{Rat(1), Rat(1)}, 12);
  IdentityReport r1 = check_cigler_st(s1, 0, 1);
  CHECK(r1.all_hold());
  CHECK(r1.instances.at(0).lhs == "-1");
  CHECK(r1.instances.at(0).rhs == "-1");

  // s = 1/(1-x): repeated rows force the left side to zero, and
  // t = 1 - x has t_3 = 0 on the right.
  RationalFunction geo{Polynomial::constant(Rat(1)), Polynomial{Rat(1), Rat(-1)}};
  IdentityReport r2 = check_cigler_st(geo.to_series(12), 1, 1);
  CHECK(r2.all_hold());
  CHECK(r2.instances.at(0).lhs == "0");

  // N = 0: the right side is the empty determinant convention.
  IdentityReport r3 = check_cigler_st(s1, 3, 0);
  CHECK(r3.all_hold());

  CHECK_THROWS_AS(check_cigler_st(PowerSeries::from_polynomial(Polynomial{Rat(2)}, 8), 0, 1),
                  std::invalid_argument);
}

TEST_CASE("reciprocal-hankel identity on seeded random polynomials") {
  oracle::Rng rng(109);
  for (int it = 0; it < 100; ++it) {
    std::vector<Rat> c{Rat(1)};
    long deg = rng.range(0, 6);
    for (long i = 1; i <= deg; ++i) c.emplace_back(rng.range(-9, 9));
    PowerSeries s = PowerSeries::from_polynomial(Polynomial(std::move(c)), 20);
    long m = rng.range(0, 4);
    long n = rng.range(0, 6);
    IdentityReport rep = check_cigler_st(s, m, n);
    CHECK(rep.all_hold());
  }
}

TEST_CASE("shift-reflection identities, Motzkin k=2 m=1") {
  QuadraticFamily mot = motzkin_family().quad;

  // Even: D_{4,-4} vanishes through order 4 and reflects onto D_{4,-2}
  // with shift 5 and positive sign.
  IdentityReport even = check_shift_reflection(mot, 2, 1, Parity::even, 15);
  CHECK(even.all_hold());
  CHECK(even.failure_count() == 0);

  // Odd: D_{3,-3} vanishes through order 3 and reflects onto D_{3,-1}
  // with shift 4.
  IdentityReport odd = check_shift_reflection(mot, 2, 1, Parity::odd, 15);
  CHECK(odd.all_hold());
}

TEST_CASE("shift-reflection identities, Catalan k=1 m=0") {
  IdentityReport rep = check_shift_reflection(catalan_family().quad, 1, 0, Parity::even, 8);
  CHECK(rep.all_hold());
  // The window 1..m+ak-1 = 1..0 is empty: recorded as vacuous, not skipped.
  bool has_vacuous = false;
  for (const auto& inst : rep.instances)
    if (inst.status == CheckStatus::vacuous) has_vacuous = true;
  CHECK(has_vacuous);
}

TEST_CASE("shift-reflection grid over small parameters") {
  for (const auto& fam : {catalan_family().quad, motzkin_family().quad}) {
    for (long k = 1; k <= 2; ++k)
      for (long m = 0; m <= 2; ++m)
        for (Parity p : {Parity::even, Parity::odd})
          CHECK(check_shift_reflection(fam, k, m, p, 5).all_hold());
  }
}

TEST_CASE("shift-reflection requires the x^a form") {
  QuadraticFamily fam{"free-form", Polynomial::constant(Rat(2)), Polynomial::constant(Rat(-1)),
                      Polynomial::monomial(1), std::nullopt};
  CHECK_THROWS_AS(check_shift_reflection(fam, 1, 0, Parity::even, 3), BadEquation);
}

TEST_CASE("degree-condition failure is reported, not asserted") {
  // w = 1, u = 1 + x^3, v = x: deg L_2 = deg(u^2 - 2vw) = 6 > 2 = 2*1*a.
  QuadraticFamily fam = custom_family(Polynomial::constant(Rat(1)),
                                      Polynomial{Rat(1), Rat(0), Rat(0), Rat(1)},
                                      Polynomial::monomial(1));
  REQUIRE(fam.a.has_value());
  IdentityReport rep = check_shift_reflection(fam, 1, 0, Parity::even, 4);
  REQUIRE(rep.instances.size() == 1);
  CHECK(rep.instances[0].status == CheckStatus::degree_condition_failed);
  CHECK(rep.all_hold());  // nothing asserted, nothing failed
}
