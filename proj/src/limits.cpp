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

#include "hurwitz/limits.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

#include "hurwitz/elementary.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/fibpoly.hpp"
#include "hurwitz/identities.hpp"

namespace hurwitz {

namespace {

constexpr long kDefaultMaxPrecisionBits = 10000;
constexpr long kSeriesGuardDigits = 10;

// Runs fn at increasing working precision until the enclosure has relative
// width below 10^-(digits+1), which makes the rounded `digits`-digit string
// certified. fn returns nullopt when a divisor enclosure straddled zero.
template <typename Fn>
PrecReal refine(long digits, const char* what, Fn fn) {
  if (digits < 1) throw std::invalid_argument(std::string(what) + ": digits must be >= 1");
  const Rational goal = pow(Rational(10), -(digits + 1));
  const long cap = max_precision_bits();
  for (long work = digits + kSeriesGuardDigits;; work *= 2) {
    if (PrecReal::bits_for_digits(work) > cap) {
      throw PrecisionExhausted(std::string(what) + ": no certified result within " + std::to_string(cap) +
                               " bits (HURWITZ_MAX_PRECISION)");
    }
    std::optional<PrecReal> v = fn(work);
    if (v && !v->contains_zero() && v->rel_error_bound() <= goal) return v->with_digits(digits);
  }
}

long sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

struct Coefficients {
  BigInt f_r1, f_r, f_drm1, f_dr, c;  // F_{r+1}, F_r, F_{d-r-1}, F_{d-r}, beta1 F_d
};

Coefficients coefficients(const CFParams& p) {
  const BigInt a = p.alpha;
  return {fib_eval(p.r + 1, a), fib_eval(p.r, a), fib_eval(p.d - p.r - 1, a), fib_eval(p.d - p.r, a),
          fib_eval(p.d, a) * p.beta1};
}

PrecReal numerator_from(const CFParams& p, const Coefficients& k, const SeriesValue& s) {
  return s.A * Rational(k.f_r1) + s.B * Rational(sign_pow(p.d - p.r) * k.f_drm1 * k.c);
}

PrecReal denominator_from(const CFParams& p, const Coefficients& k, const SeriesValue& s) {
  return s.A * Rational(k.f_r) + s.B * Rational(sign_pow(p.d - p.r + 1) * k.f_dr * k.c);
}

bool is_half_odd(const Rational& x) { return x.den() == 2; }

long half_odd_k(const Rational& nu) {
  // nu = k + 1/2 = (2k+1)/2
  const BigInt k = (nu.num() - 1) / 2;
  return k.get_si();
}

using Poly = std::vector<Rational>;

Poly poly_add(const Poly& a, const Poly& b, const Rational& cb) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += cb * b[i];
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

// c * u * a
Poly poly_times_u(const Poly& a, const Rational& c) {
  Poly out(a.size() + 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i + 1] = c * a[i];
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

// a * x + b * y for forms
HalfOddForm combine(const HalfOddForm& a, const Rational& x, const HalfOddForm& b, const Rational& y) {
  return {poly_add(poly_add({}, a.sin_coeffs, x), b.sin_coeffs, y),
          poly_add(poly_add({}, a.cos_coeffs, x), b.cos_coeffs, y)};
}

HalfOddForm times_u(const HalfOddForm& f, const Rational& c) {
  return {poly_times_u(f.sin_coeffs, c), poly_times_u(f.cos_coeffs, c)};
}

PrecReal eval_poly(const Poly& p, const PrecReal& u, const PrecReal& zero) {
  PrecReal acc = zero;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * u + *it;
  return acc;
}

PrecReal working_copy(const PrecReal& z, long digits) {
  const mpfr_prec_t bits = std::max(z.bits(), PrecReal::bits_for_digits(digits));
  return z * PrecReal::from_rational_bits(Rational(1), bits, digits);
}

enum class BesselRoute { kAuto, kElementaryOnly };

PrecReal xi_bessel_impl(const CFParams& params, long digits, BesselRoute route) {
  params.validate();
  const MagicPair m = magic(params);
  if (route == BesselRoute::kElementaryOnly && !is_half_odd(m.sigma)) {
    throw std::invalid_argument("xi_elementary: sigma = " + m.sigma.to_string() + " is not half of an odd integer");
  }
  const Coefficients k = coefficients(params);
  const BesselKind kind = (params.d % 2 == 1) ? BesselKind::kI : BesselKind::kJ;
  const Rational z = Rational(BigInt(2), k.c);
  return refine(digits, "xi_bessel", [&](long work) -> std::optional<PrecReal> {
    const PrecReal zw = PrecReal::from_rational(z, work);
    PrecReal ratio;
    if (is_half_odd(m.sigma)) {
      const long ks = half_odd_k(m.sigma);
      const PrecReal top = half_odd_bracket(kind, {ks - 1}, zw, work);
      const PrecReal bottom = half_odd_bracket(kind, {ks}, zw, work);
      if (bottom.contains_zero()) return std::nullopt;
      ratio = top / bottom;
    } else {
      try {
        ratio = bessel_ratio(kind, m.sigma, zw, work);
      } catch (const UnsupportedOrder&) {
        throw;
      } catch (const std::domain_error&) {
        return std::nullopt;
      }
    }
    const long r = params.r;
    const PrecReal num = ratio * Rational(k.f_r1) + Rational(sign_pow(r + 1) * k.f_drm1);
    const PrecReal den = ratio * Rational(k.f_r) + Rational(sign_pow(r) * k.f_dr);
    if (den.contains_zero()) return std::nullopt;
    return num / den;
  });
}

}  // namespace

long max_precision_bits() {
  const char* env = std::getenv("HURWITZ_MAX_PRECISION");
  if (env == nullptr || *env == '\0') return kDefaultMaxPrecisionBits;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 64) return kDefaultMaxPrecisionBits;
  return v;
}

HyperSum hyper0f1(const Rational& b, const PrecReal& w, long digits) {
  if (b <= Rational(0)) throw std::invalid_argument("hyper0f1: b must be positive");
  const mpfr_prec_t bits = std::max(PrecReal::bits_for_digits(digits), w.bits());
  const PrecReal one = PrecReal::from_rational_bits(Rational(1), bits, digits);
  const Rational threshold = pow(Rational(10), -(digits + kSeriesGuardDigits));
  const Rational wmag = w.mag_upper();

  PrecReal term = one;
  PrecReal sum = one;
  int small_run = 0;
  for (long m = 0;; ++m) {
    small_run = (term.mag_upper() < threshold * sum.mag_upper()) ? small_run + 1 : 0;
    const PrecReal next = term * w / (Rational(m + 1) * (b + Rational(m)));
    if (small_run >= 3 && Rational(m + 1) > Rational(2) * wmag) {
      // Ratio of consecutive later terms is at most q < 1/2.
      const Rational q = wmag / (Rational(m + 2) * (b + Rational(m + 1)));
      const Rational tail = next.mag_upper() / (Rational(1) - q);
      return {sum.widened(tail), m + 1, tail};
    }
    sum += next;
    term = next;
  }
}

SeriesValue series_AB(const Rational& sigma, const Rational& rho, long digits) {
  if (sigma <= Rational(0)) throw std::invalid_argument("series_AB: sigma must be positive");
  if (rho.is_zero()) {
    return {PrecReal::from_rational(Rational(1), digits), PrecReal::from_rational(Rational(0), digits), 1,
            PrecReal::from_rational(Rational(0), digits)};
  }
  const PrecReal w = PrecReal::from_rational(rho, digits);
  const HyperSum a = hyper0f1(sigma, w, digits);
  // B = (rho / sigma) * sum_m rho^m / (m! (sigma+1)^(m))
  const HyperSum b = hyper0f1(sigma + Rational(1), w, digits);
  const Rational scale = (rho / sigma).abs();
  const Rational tail = std::max(a.tail, b.tail * scale);
  return {a.value, b.value * (rho / sigma), std::max(a.terms, b.terms), PrecReal::from_rational(tail, digits)};
}

PrecReal xi_limit(const CFParams& params, long digits) {
  params.validate();
  const MagicPair m = magic(params);
  const Coefficients k = coefficients(params);
  return refine(digits, "xi_limit", [&](long work) -> std::optional<PrecReal> {
    const SeriesValue s = series_AB(m.sigma, m.rho, work);
    const PrecReal den = denominator_from(params, k, s);
    if (den.contains_zero()) return std::nullopt;
    return numerator_from(params, k, s) / den;
  });
}

PrecReal numerator_limit(const CFParams& params, long digits) {
  params.validate();
  const MagicPair m = magic(params);
  const Coefficients k = coefficients(params);
  return refine(digits, "numerator_limit", [&](long work) -> std::optional<PrecReal> {
    return numerator_from(params, k, series_AB(m.sigma, m.rho, work));
  });
}

PrecReal denominator_limit(const CFParams& params, long digits) {
  params.validate();
  const MagicPair m = magic(params);
  const Coefficients k = coefficients(params);
  return refine(digits, "denominator_limit", [&](long work) -> std::optional<PrecReal> {
    return denominator_from(params, k, series_AB(m.sigma, m.rho, work));
  });
}

HalfOddForm half_odd_form(BesselKind kind, long k) {
  const HalfOddForm minus_half{{}, {Rational(1)}};  // cosh / cos
  const HalfOddForm plus_half{{Rational(1)}, {}};   // sinh / sin
  const bool is_i = kind == BesselKind::kI;
  if (k == -1) return minus_half;
  if (k == 0) return plus_half;
  if (k > 0) {
    HalfOddForm lo = minus_half, hi = plus_half;
    for (long j = 0; j < k; ++j) {
      const Rational two_nu(2 * j + 1);  // 2 * (j + 1/2)
      // I: f_{nu+1} = f_{nu-1} - 2 nu u f_nu;  J: f_{nu+1} = 2 nu u f_nu - f_{nu-1}
      HalfOddForm next = is_i ? combine(lo, Rational(1), times_u(hi, two_nu), Rational(-1))
                              : combine(times_u(hi, two_nu), Rational(1), lo, Rational(-1));
      lo = std::move(hi);
      hi = std::move(next);
    }
    return hi;
  }
  HalfOddForm hi = plus_half, cur = minus_half;
  for (long j = -1; j > k; --j) {
    const Rational two_nu(2 * j + 1);
    // I: f_{nu-1} = f_{nu+1} + 2 nu u f_nu;  J: f_{nu-1} = 2 nu u f_nu - f_{nu+1}
    HalfOddForm prev = is_i ? combine(hi, Rational(1), times_u(cur, two_nu), Rational(1))
                            : combine(times_u(cur, two_nu), Rational(1), hi, Rational(-1));
    hi = std::move(cur);
    cur = std::move(prev);
  }
  return cur;
}

PrecReal half_odd_bracket(BesselKind kind, BesselOrderHalfOdd order, const PrecReal& z, long digits) {
  if (z.contains_zero()) throw std::domain_error("half_odd_bracket: z must be nonzero");
  const PrecReal zw = working_copy(z, digits);
  const PrecReal zero = zw * Rational(0);
  const PrecReal u = (zero + Rational(1)) / zw;
  const HalfOddForm f = half_odd_form(kind, order.k);
  const bool is_i = kind == BesselKind::kI;
  const PrecReal s = trig_enclosure(is_i ? TrigKind::kSinh : TrigKind::kSin, zw);
  const PrecReal c = trig_enclosure(is_i ? TrigKind::kCosh : TrigKind::kCos, zw);
  const PrecReal out = eval_poly(f.sin_coeffs, u, zero) * s + eval_poly(f.cos_coeffs, u, zero) * c;
  return out.with_digits(digits);
}

PrecReal elementary_half_odd(BesselKind kind, BesselOrderHalfOdd order, const PrecReal& z, long digits) {
  if (z.sign() <= 0) throw std::invalid_argument("elementary_half_odd: z must be positive");
  const PrecReal zw = working_copy(z, digits);
  const PrecReal pi = pi_enclosure(zw.bits(), digits);
  const PrecReal two = PrecReal::from_rational_bits(Rational(2), zw.bits(), digits);
  const PrecReal prefactor = (two / (pi * zw)).sqrt();
  return (prefactor * half_odd_bracket(kind, order, zw, digits)).with_digits(digits);
}

PrecReal bessel_I(const Rational& nu, const PrecReal& z, long digits) {
  if (!is_half_odd(nu)) {
    throw UnsupportedOrder("bessel_I: standalone values only at half-odd orders, got nu = " + nu.to_string());
  }
  return elementary_half_odd(BesselKind::kI, {half_odd_k(nu)}, z, digits);
}

PrecReal bessel_J(const Rational& nu, const PrecReal& z, long digits) {
  if (!is_half_odd(nu)) {
    throw UnsupportedOrder("bessel_J: standalone values only at half-odd orders, got nu = " + nu.to_string());
  }
  return elementary_half_odd(BesselKind::kJ, {half_odd_k(nu)}, z, digits);
}

PrecReal bessel_ratio(BesselKind kind, const Rational& nu, const PrecReal& z, long digits) {
  if (nu <= Rational(0)) throw std::invalid_argument("bessel_ratio: nu must be positive");
  if (z.contains_zero()) throw std::domain_error("bessel_ratio: z must be nonzero");
  const PrecReal zw = working_copy(z, digits);
  PrecReal w = zw.sqr() / Rational(4);
  if (kind == BesselKind::kJ) w = -w;
  const HyperSum lower_order = hyper0f1(nu, w, digits);              // S_{nu-1}
  const HyperSum upper_order = hyper0f1(nu + Rational(1), w, digits);  // S_nu
  return (lower_order.value * nu / ((zw / Rational(2)) * upper_order.value)).with_digits(digits);
}

PrecReal xi_bessel(const CFParams& params, long digits) { return xi_bessel_impl(params, digits, BesselRoute::kAuto); }

PrecReal xi_elementary(const CFParams& params, long digits) {
  return xi_bessel_impl(params, digits, BesselRoute::kElementaryOnly);
}

PrecReal lehmer_d1(long beta0, long beta1, long digits) {
  if (beta0 < 1 || beta1 < 1) throw std::invalid_argument("lehmer_d1: beta0 and beta1 must be positive");
  const Rational sigma{BigInt(beta0), BigInt(beta1)};
  const Rational rho(BigInt(1), BigInt(beta1) * beta1);
  return refine(digits, "lehmer_d1", [&](long work) -> std::optional<PrecReal> {
    const SeriesValue s = series_AB(sigma, rho, work);
    return s.A / (s.B * Rational(beta1));
  });
}

PrecReal perron_d1(long beta0, long beta1, long digits) {
  if (beta0 < 1 || beta1 < 1) throw std::invalid_argument("perron_d1: beta0 and beta1 must be positive");
  const Rational s{BigInt(beta0), BigInt(beta1)};
  const Rational x(BigInt(1), BigInt(beta1) * beta1);
  return refine(digits, "perron_d1", [&](long work) -> std::optional<PrecReal> {
    const Rational threshold = pow(Rational(10), -(work + kSeriesGuardDigits));
    Rational u(1);  // x^n / (n! (s)^(n))
    Rational num_sum(0), den_sum(0);
    for (long n = 0;; ++n) {
      num_sum += u;
      den_sum += u / (s + Rational(n));  // x^n / (n! (s)^(n+1))
      const Rational next = u * x / (Rational(n + 1) * (s + Rational(n)));
      if (next < threshold * num_sum && Rational(n + 1) > Rational(2) * x) {
        const Rational q = x / (Rational(n + 2) * (s + Rational(n + 1)));
        const Rational tail_num = next / (Rational(1) - q);
        const Rational tail_den = next / (s + Rational(n + 1)) / (Rational(1) - q);
        const Rational lo = Rational(beta1) * num_sum / (den_sum + tail_den);
        const Rational hi = Rational(beta1) * (num_sum + tail_num) / den_sum;
        return PrecReal::from_bounds(lo, hi, work);
      }
      u = next;
    }
  });
}

bool wlang_limit_check(long m, long n, long digits) {
  if (m < 2) throw std::invalid_argument("wlang_limit_check: m must be >= 2");
  if (n < 1) throw std::invalid_argument("wlang_limit_check: n must be >= 1");
  const Rational x(BigInt(1), BigInt(4) * m * m);
  const Rational lhs = p_poly(n).eval(x) / q_poly(n).eval(x);
  // sqrt(x) I_1(2 sqrt x) / I_0(2 sqrt x) = B / A at sigma = 1, rho = x.
  const SeriesValue s = series_AB(Rational(1), x, digits + kSeriesGuardDigits);
  const PrecReal diff = s.B / s.A + (-lhs);
  return diff.mag_upper() < pow(Rational(10), -digits);
}

}  // namespace hurwitz
