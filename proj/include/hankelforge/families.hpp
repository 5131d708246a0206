#pragma once

#include <functional>
#include <string>

#include "hankelforge/identities.hpp"

namespace hankelforge {

// A built-in family: its quadratic equation plus, when one is available, an
// independent closed-form evaluator for the coefficients themselves.
struct NamedFamily {
  QuadraticFamily quad;
  std::function<Rat(long)> coefficient;  // may be empty
};

NamedFamily catalan_family();
NamedFamily motzkin_family();
NamedFamily generalized_catalan_family();

// Validated custom family from raw quadratic data.
QuadraticFamily custom_family(Polynomial w, Polynomial u, Polynomial v);

// Built-in family by CLI name ("catalan", "motzkin", "generalized-catalan").
NamedFamily family_by_name(const std::string& name);

// n-th coefficient of the k-th convolution power of the Catalan generating
// function: k/(n+k) * C(2n+k-1, n). Always a nonnegative integer.
Rat catalan_convolution(long k, long n);

// n-th Motzkin number via the binomial sum  sum_i C(n,2i) C(2i,i) / (i+1).
Rat motzkin_number(long n);

// Chebyshev polynomial of the first kind, T_1 = x, T_2 = 2x^2 - 1,
// T_k = 2x T_{k-1} - T_{k-2}.
Polynomial chebyshev_t(long k);

// 2 (-x)^k T_k((x-1)/(2x)): a polynomial, equal to the Motzkin family's L_k.
Polynomial motzkin_lucas_via_chebyshev(long k);

// The four Motzkin shifted-determinant sequences with known piecewise
// closed forms: D_{3,-3}, D_{2,-1}, D_{2,-2}, D_{2,-3}.
enum class ClosedFormId { d33, d21, d22, d23 };

ClosedFormId closed_form_id(const std::string& name);  // UnknownFamilyId
std::string to_string(ClosedFormId id);

// (K, M) of the determinant sequence the closed form describes.
HankelQuery closed_form_query(ClosedFormId id);

// Piecewise closed-form value of the sequence at n. For d23 the n <= 3
// values come from a stored table computed directly (the formula branch is
// stated only for n >= 4).
Rat closed_form_det(ClosedFormId id, long n);

// Compares closed_form_det against direct determinant evaluation on the
// Motzkin family, n = 0..n_max.
IdentityReport verify_closed_form(ClosedFormId id, long n_max);

}  // namespace hankelforge
