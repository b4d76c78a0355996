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

#include "hurwitz/precreal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace hurwitz {

MpfrValue::MpfrValue(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

MpfrValue::MpfrValue(const MpfrValue& o) {
  mpfr_init2(v_, o.bits());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

MpfrValue::MpfrValue(MpfrValue&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

MpfrValue& MpfrValue::operator=(MpfrValue o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

MpfrValue::~MpfrValue() { mpfr_clear(v_); }

Rational MpfrValue::to_rational() const {
  if (!mpfr_number_p(v_)) throw std::domain_error("PrecReal: non-finite endpoint");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return Rational(q.get_num(), q.get_den());
}

namespace {

MpfrValue rational_to(const Rational& r, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  MpfrValue v(bits);
  mpfr_set_q(v.get(), r.raw().get_mpq_t(), rnd);
  return v;
}

mpfr_prec_t max_bits(const MpfrValue& a, const MpfrValue& b) { return std::max(a.bits(), b.bits()); }

// Renders digit string `ds` (as from mpfr_get_str, no sign) with value 0.ds * 10^exp.
std::string format_decimal(bool negative, const std::string& ds, mpfr_exp_t exp) {
  std::string out = negative ? "-" : "";
  const auto n = static_cast<mpfr_exp_t>(ds.size());
  if (exp > 0 && exp <= 40) {
    if (exp >= n) {
      out += ds + std::string(static_cast<size_t>(exp - n), '0');
    } else {
      out += ds.substr(0, static_cast<size_t>(exp)) + "." + ds.substr(static_cast<size_t>(exp));
    }
  } else if (exp <= 0 && exp > -10) {
    out += "0." + std::string(static_cast<size_t>(-exp), '0') + ds;
  } else {
    out += ds.substr(0, 1);
    if (n > 1) out += "." + ds.substr(1);
    out += "e" + std::to_string(exp - 1);
  }
  return out;
}

struct Rendered {
  std::string text;
  bool certified;
};

Rendered render(const PrecReal& x, const Rational& mid, long sig) {
  MpfrValue m = rational_to(mid, x.bits() + 16, MPFR_RNDN);
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(sig), m.get(), MPFR_RNDN);
  std::string ds(raw);
  mpfr_free_str(raw);
  const bool negative = !ds.empty() && ds[0] == '-';
  if (negative) ds.erase(0, 1);

  // printed = +-N * 10^(exp - sig), unit = 10^(exp - sig)
  const long shift = static_cast<long>(exp) - sig;
  const Rational unit = pow(Rational(10), shift);
  Rational printed = Rational(parse_bigint(ds)) * unit;
  if (negative) printed = -printed;
  const Rational err = std::max((x.lower() - printed).abs(), (x.upper() - printed).abs());
  return {format_decimal(negative, ds, exp), err <= unit};
}

}  // namespace

mpfr_prec_t PrecReal::bits_for_digits(long digits) {
  if (digits < 1) throw std::invalid_argument("PrecReal: digits must be >= 1");
  // ceil(digits * 3.33) + 64 guard bits
  return static_cast<mpfr_prec_t>((digits * 333 + 99) / 100 + 64);
}

PrecReal::PrecReal() : lo_(bits_for_digits(1)), hi_(bits_for_digits(1)), digits_(1) {}

PrecReal::PrecReal(MpfrValue lo, MpfrValue hi, long digits)
    : lo_(std::move(lo)), hi_(std::move(hi)), digits_(digits) {}

PrecReal PrecReal::from_rational(const Rational& r, long digits) {
  return from_rational_bits(r, bits_for_digits(digits), digits);
}

PrecReal PrecReal::from_rational_bits(const Rational& r, mpfr_prec_t bits, long digits) {
  return PrecReal(rational_to(r, bits, MPFR_RNDD), rational_to(r, bits, MPFR_RNDU), digits);
}

PrecReal PrecReal::from_bounds(const Rational& lo, const Rational& hi, long digits) {
  if (hi < lo) throw std::invalid_argument("PrecReal: empty interval");
  const mpfr_prec_t bits = bits_for_digits(digits);
  return PrecReal(rational_to(lo, bits, MPFR_RNDD), rational_to(hi, bits, MPFR_RNDU), digits);
}

Rational PrecReal::target_rel_err() const { return pow(Rational(10), -digits_); }

Rational PrecReal::midpoint() const { return (lower() + upper()) / Rational(2); }

Rational PrecReal::radius() const { return (upper() - lower()) / Rational(2); }

bool PrecReal::is_exact() const { return mpfr_equal_p(lo_.get(), hi_.get()) != 0; }

bool PrecReal::contains(const Rational& x) const { return lower() <= x && x <= upper(); }

bool PrecReal::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

int PrecReal::sign() const {
  if (mpfr_sgn(lo_.get()) > 0) return 1;
  if (mpfr_sgn(hi_.get()) < 0) return -1;
  return 0;
}

Rational PrecReal::rel_error_bound() const {
  if (is_exact()) return Rational(0);
  if (contains_zero()) throw std::domain_error("PrecReal: relative error of an interval containing zero");
  return radius() / mag_lower();
}

bool PrecReal::meets_target() const {
  if (is_exact()) return true;
  if (contains_zero()) return false;
  return rel_error_bound() <= target_rel_err();
}

Rational PrecReal::mag_upper() const { return std::max(lower().abs(), upper().abs()); }

Rational PrecReal::mag_lower() const {
  if (contains_zero()) return Rational(0);
  return std::min(lower().abs(), upper().abs());
}

double PrecReal::approx() const {
  MpfrValue m(bits() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return mpfr_get_d(m.get(), MPFR_RNDN);
}

PrecReal PrecReal::operator-() const {
  MpfrValue lo(hi_.bits()), hi(lo_.bits());
  mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
  return PrecReal(std::move(lo), std::move(hi), digits_);
}

PrecReal& PrecReal::operator+=(const PrecReal& o) {
  const mpfr_prec_t b = max_bits(lo_, o.lo_);
  MpfrValue lo(b), hi(b);
  mpfr_add(lo.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  digits_ = std::min(digits_, o.digits_);
  return *this;
}

PrecReal& PrecReal::operator-=(const PrecReal& o) { return *this += -o; }

PrecReal& PrecReal::operator*=(const PrecReal& o) {
  const mpfr_prec_t b = max_bits(lo_, o.lo_);
  const mpfr_srcptr a[2] = {lo_.get(), hi_.get()};
  const mpfr_srcptr c[2] = {o.lo_.get(), o.hi_.get()};
  MpfrValue lo(b), hi(b), t(b);
  bool first = true;
  for (auto x : a) {
    for (auto y : c) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), lo.get())) mpfr_set(lo.get(), t.get(), MPFR_RNDN);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), hi.get())) mpfr_set(hi.get(), t.get(), MPFR_RNDN);
      first = false;
    }
  }
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  digits_ = std::min(digits_, o.digits_);
  return *this;
}

PrecReal& PrecReal::operator/=(const PrecReal& o) {
  if (o.contains_zero()) throw std::domain_error("PrecReal: division by an interval containing zero");
  const mpfr_prec_t b = max_bits(lo_, o.lo_);
  const mpfr_srcptr a[2] = {lo_.get(), hi_.get()};
  const mpfr_srcptr c[2] = {o.lo_.get(), o.hi_.get()};
  MpfrValue lo(b), hi(b), t(b);
  bool first = true;
  for (auto x : a) {
    for (auto y : c) {
      mpfr_div(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), lo.get())) mpfr_set(lo.get(), t.get(), MPFR_RNDN);
      mpfr_div(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), hi.get())) mpfr_set(hi.get(), t.get(), MPFR_RNDN);
      first = false;
    }
  }
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  digits_ = std::min(digits_, o.digits_);
  return *this;
}

PrecReal PrecReal::operator*(const Rational& r) const {
  return *this * from_rational_bits(r, bits(), digits_);
}

PrecReal PrecReal::operator+(const Rational& r) const {
  return *this + from_rational_bits(r, bits(), digits_);
}

PrecReal PrecReal::operator/(const Rational& r) const {
  return *this / from_rational_bits(r, bits(), digits_);
}

PrecReal PrecReal::sqr() const {
  if (!contains_zero()) return *this * *this;
  const Rational m = mag_upper();
  const PrecReal top = from_rational_bits(m, bits(), digits_);
  PrecReal out = top * top;
  mpfr_set_zero(out.lo_.get(), 1);
  return out;
}

PrecReal PrecReal::sqrt() const {
  if (mpfr_sgn(lo_.get()) < 0) throw std::domain_error("PrecReal: sqrt of a possibly negative value");
  MpfrValue lo(bits()), hi(bits());
  mpfr_sqrt(lo.get(), lo_.get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), hi_.get(), MPFR_RNDU);
  return PrecReal(std::move(lo), std::move(hi), digits_);
}

PrecReal PrecReal::abs() const {
  if (mpfr_sgn(lo_.get()) >= 0) return *this;
  if (mpfr_sgn(hi_.get()) <= 0) return -*this;
  PrecReal out = *this;
  mpfr_set_zero(out.lo_.get(), 1);
  mpfr_set_q(out.hi_.get(), mag_upper().raw().get_mpq_t(), MPFR_RNDU);
  return out;
}

PrecReal PrecReal::widened(const Rational& eps) const {
  if (eps.sign() < 0) throw std::invalid_argument("PrecReal: negative widening");
  if (eps.is_zero()) return *this;
  MpfrValue lo(bits()), hi(bits());
  MpfrValue e_up = rational_to(eps, bits(), MPFR_RNDU);
  mpfr_sub(lo.get(), lo_.get(), e_up.get(), MPFR_RNDD);
  mpfr_add(hi.get(), hi_.get(), e_up.get(), MPFR_RNDU);
  return PrecReal(std::move(lo), std::move(hi), digits_);
}

PrecReal PrecReal::hull(const PrecReal& o) const {
  const mpfr_prec_t b = max_bits(lo_, o.lo_);
  MpfrValue lo(b), hi(b);
  mpfr_min(lo.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
  mpfr_max(hi.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
  return PrecReal(std::move(lo), std::move(hi), std::min(digits_, o.digits_));
}

DecimalString PrecReal::to_decimal(long sig_digits) const {
  if (sig_digits < 1) throw std::invalid_argument("PrecReal: need at least one digit");
  if (is_exact() && mpfr_zero_p(lo_.get())) return {"0", true, sig_digits};
  const Rational mid = midpoint();
  if (mid.is_zero()) return {"0", false, 0};
  Rendered full = render(*this, mid, sig_digits);
  DecimalString out{full.text, full.certified, full.certified ? sig_digits : 0};
  if (!full.certified) {
    for (long k = sig_digits - 1; k >= 1; --k) {
      if (render(*this, mid, k).certified) {
        out.certified_digits = k;
        break;
      }
    }
  }
  return out;
}

}  // namespace hurwitz
