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

#ifndef HURWITZ_PRECREAL_HPP
#define HURWITZ_PRECREAL_HPP

#include <mpfr.h>

#include <string>

#include "hurwitz/exactnum.hpp"

namespace hurwitz {

// RAII owner of one mpfr_t.
class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t bits);
  MpfrValue(const MpfrValue& o);
  MpfrValue(MpfrValue&& o) noexcept;
  MpfrValue& operator=(MpfrValue o) noexcept;
  ~MpfrValue();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  Rational to_rational() const;  // exact, finite values only

 private:
  mpfr_t v_;
};

struct DecimalString {
  std::string text;
  bool certified = false;     // true value lies within one unit of the last printed digit
  long certified_digits = 0;  // largest significant-digit count for which that holds
};

/// A real number known to lie in the closed interval [lower, upper].
///
/// Endpoints are binary floating-point numbers with a mantissa of `bits()`
/// bits and every operation rounds outward, so the enclosure is rigorous.
/// `digits()` records the requested decimal accuracy; it travels with the
/// value so callers can test `meets_target()` after a chain of operations.
class PrecReal {
 public:
  /// Mantissa size used for a request of `digits` decimal digits.
  static mpfr_prec_t bits_for_digits(long digits);

  PrecReal();  // exact zero
  static PrecReal from_rational(const Rational& r, long digits);
  static PrecReal from_rational_bits(const Rational& r, mpfr_prec_t bits, long digits);
  static PrecReal from_bounds(const Rational& lo, const Rational& hi, long digits);

  long digits() const { return digits_; }
  /// Same enclosure with a different requested accuracy.
  PrecReal with_digits(long digits) const { return PrecReal(lo_, hi_, digits); }
  mpfr_prec_t bits() const { return lo_.bits(); }
  Rational target_rel_err() const;

  Rational lower() const { return lo_.to_rational(); }
  Rational upper() const { return hi_.to_rational(); }
  Rational midpoint() const;
  Rational radius() const;
  bool is_exact() const;
  bool contains(const Rational& x) const;
  bool contains_zero() const;
  /// +1 / -1 when the whole interval has that sign, 0 otherwise.
  int sign() const;
  /// Upper bound on |x - midpoint| / |x| over the interval; throws when it contains zero.
  Rational rel_error_bound() const;
  bool meets_target() const;

  /// Upper bound of |x| as an exact rational.
  Rational mag_upper() const;
  /// Lower bound of |x| (0 when the interval contains zero).
  Rational mag_lower() const;
  double approx() const;

  PrecReal operator-() const;
  PrecReal& operator+=(const PrecReal& o);
  PrecReal& operator-=(const PrecReal& o);
  PrecReal& operator*=(const PrecReal& o);
  PrecReal& operator/=(const PrecReal& o);  // throws std::domain_error if o contains zero
  friend PrecReal operator+(PrecReal a, const PrecReal& b) { return a += b; }
  friend PrecReal operator-(PrecReal a, const PrecReal& b) { return a -= b; }
  friend PrecReal operator*(PrecReal a, const PrecReal& b) { return a *= b; }
  friend PrecReal operator/(PrecReal a, const PrecReal& b) { return a /= b; }

  PrecReal operator*(const Rational& r) const;
  PrecReal operator+(const Rational& r) const;
  PrecReal operator/(const Rational& r) const;

  PrecReal sqr() const;
  PrecReal sqrt() const;  // requires lower() >= 0
  PrecReal abs() const;
  /// Widen by +-eps (eps >= 0); used to fold truncation bounds into the enclosure.
  PrecReal widened(const Rational& eps) const;
  /// Intersection hull helper: the smallest interval containing both.
  PrecReal hull(const PrecReal& o) const;

  /// Decimal rendering with `sig_digits` significant digits, rounded from
  /// the midpoint, plus the certification verdict for that string.
  DecimalString to_decimal(long sig_digits) const;

 private:
  PrecReal(MpfrValue lo, MpfrValue hi, long digits);
  MpfrValue lo_;
  MpfrValue hi_;
  long digits_;
};

}  // namespace hurwitz

#endif  // HURWITZ_PRECREAL_HPP
