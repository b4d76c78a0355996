// Copyright 2026 The hurwitz-cf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Limits of xi(alpha, beta0, beta1, d, r) from the series
//
//   A = sum_m rho^m / (m! (sigma)^(m)),   B = sum_m rho^(m+1) / (m! (sigma)^(m+1))
//
// ((s)^(m) is the rising factorial s (s+1) ... (s+m-1)), their Bessel
// restatements, and the d = 1 formulas of Lehmer and Perron.
//
// Gamma never has to be evaluated: I_nu(z) = (z/2)^nu / Gamma(nu+1) * S_nu(z^2/4)
// with S_nu(w) = sum_m w^m / (m! (nu+1)^(m)), so every ratio I_{nu-1}/I_nu
// is nu S_{nu-1} / ((z/2) S_nu), and for J the same with w = -z^2/4.

#ifndef HURWITZ_LIMITS_HPP
#define HURWITZ_LIMITS_HPP

#include <vector>

#include "hurwitz/exactnum.hpp"
#include "hurwitz/family.hpp"
#include "hurwitz/precreal.hpp"

namespace hurwitz {

/// Cap on internal precision escalation, from HURWITZ_MAX_PRECISION
/// (bits, default 10000).
long max_precision_bits();

struct SeriesValue {
  PrecReal A;
  PrecReal B;
  long terms_used = 0;
  PrecReal tail_bound;  // bound on the truncation error of A and of B
};

/// sum_m w^m / (m! (b)^(m)) for b > 0, truncation error folded into the result.
struct HyperSum {
  PrecReal value;
  long terms = 0;
  Rational tail;
};
HyperSum hyper0f1(const Rational& b, const PrecReal& w, long digits);

/// Requires sigma > 0.
SeriesValue series_AB(const Rational& sigma, const Rational& rho, long digits);

/// The limit of xi. Escalates precision until the enclosure pins `digits`
/// significant digits; throws PrecisionExhausted past max_precision_bits().
PrecReal xi_limit(const CFParams& params, long digits);

/// Limits of p_{nd+r-1} resp. q_{nd+r-1} divided by F_d^n beta1^n (sigma)^(n):
/// F_{r+1} A + (-1)^(d-r) F_{d-r-1} F_d beta1 B and the matching q form.
PrecReal numerator_limit(const CFParams& params, long digits);
PrecReal denominator_limit(const CFParams& params, long digits);

enum class BesselKind { kI, kJ };

/// Order nu = k + 1/2.
struct BesselOrderHalfOdd {
  long k = 0;
  Rational nu() const { return Rational(2 * k + 1, 2); }
};

/// X_{k+1/2}(z) = sqrt(2/(pi z)) (S(1/z) * s(z) + C(1/z) * c(z)) where
/// (s, c) = (sinh, cosh) for I and (sin, cos) for J. The vectors hold the
/// coefficients of the polynomials S and C in u = 1/z, lowest degree first.
struct HalfOddForm {
  std::vector<Rational> sin_coeffs;
  std::vector<Rational> cos_coeffs;
};
HalfOddForm half_odd_form(BesselKind kind, long k);

/// The bracket S(1/z) s(z) + C(1/z) c(z) without the sqrt(2/(pi z)) factor.
PrecReal half_odd_bracket(BesselKind kind, BesselOrderHalfOdd order, const PrecReal& z, long digits);

/// Full value including sqrt(2/(pi z)); requires z > 0. Accuracy is
/// limited by the width of `z`.
PrecReal elementary_half_odd(BesselKind kind, BesselOrderHalfOdd order, const PrecReal& z, long digits);

/// Standalone values exist only at half-odd orders; UnsupportedOrder otherwise.
PrecReal bessel_I(const Rational& nu, const PrecReal& z, long digits);
PrecReal bessel_J(const Rational& nu, const PrecReal& z, long digits);

/// X_{nu-1}(z) / X_nu(z) for rational nu > 0 and z != 0 from the S series.
PrecReal bessel_ratio(BesselKind kind, const Rational& nu, const PrecReal& z, long digits);

/// The limit of xi from the Bessel form: kind I for odd d, J for even d,
/// argument 2 / (beta1 F_d(alpha)). Half-odd sigma goes through the
/// elementary closed forms, other sigma through bessel_ratio.
PrecReal xi_bessel(const CFParams& params, long digits);

/// Same as xi_bessel but refuses (std::invalid_argument) unless sigma is half-odd.
PrecReal xi_elementary(const CFParams& params, long digits);

/// I_{s-1}(2/beta1) / I_s(2/beta1) with s = beta0/beta1, via series_AB.
PrecReal lehmer_d1(long beta0, long beta1, long digits);

/// beta1 * sum x^n/(n! (s)^(n)) / sum x^n/(n! (s)^(n+1)), x = 1/beta1^2,
/// summed exactly in rationals with a separate tail bound.
PrecReal perron_d1(long beta0, long beta1, long digits);

/// |P_n(x)/Q_n(x) - sqrt(x) I_1(2 sqrt x)/I_0(2 sqrt x)| < 10^-digits at x = 1/(4m^2).
bool wlang_limit_check(long m, long n, long digits);

}  // namespace hurwitz

#endif  // HURWITZ_LIMITS_HPP
