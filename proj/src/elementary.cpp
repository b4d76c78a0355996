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

#include "hurwitz/elementary.hpp"

#include <stdexcept>

namespace hurwitz {

namespace {

// atan(1/x) = sum_k (-1)^k / ((2k+1) x^(2k+1)); alternating with decreasing
// terms, so the first omitted term bounds the error.
PrecReal atan_inverse(long x, mpfr_prec_t bits, long digits) {
  const Rational eps = pow(Rational(2), -static_cast<long>(bits) - 8);
  const Rational x2(BigInt(x) * x);
  Rational power = Rational(x).reciprocal();  // x^-(2k+1)
  PrecReal sum = PrecReal::from_rational_bits(Rational(0), bits, digits);
  for (long k = 0;; ++k) {
    const Rational term = power / Rational(2 * k + 1);
    if (term < eps) return sum.widened(term);
    const PrecReal t = PrecReal::from_rational_bits(term, bits, digits);
    if (k % 2 == 0) {
      sum += t;
    } else {
      sum -= t;
    }
    power /= x2;
  }
}

}  // namespace

PrecReal pi_enclosure(mpfr_prec_t bits, long digits) {
  const mpfr_prec_t work = bits + 16;
  PrecReal pi = atan_inverse(5, work, digits) * Rational(16) - atan_inverse(239, work, digits) * Rational(4);
  return pi;
}

PrecReal trig_enclosure(TrigKind kind, const PrecReal& z) {
  const long digits = z.digits();
  const Rational mag = z.mag_upper();
  // Terms grow to about e^|z| before decaying; pay for that in guard bits.
  const BigInt whole = mag.num() / mag.den() + 1;
  const mpfr_prec_t work = z.bits() + 2 * static_cast<mpfr_prec_t>(whole.get_si()) + 16;
  const PrecReal one = PrecReal::from_rational_bits(Rational(1), work, digits);
  const PrecReal zw = z * one;

  const bool odd = kind == TrigKind::kSin || kind == TrigKind::kSinh;
  const bool alternating = kind == TrigKind::kSin || kind == TrigKind::kCos;
  PrecReal step = zw.sqr();
  if (alternating) step = -step;
  const Rational mag2 = mag * mag;
  const Rational eps = pow(Rational(2), -static_cast<long>(work));

  PrecReal term = odd ? zw : one;
  PrecReal sum = term;
  for (long n = odd ? 1 : 0;; n += 2) {
    // Every later term shrinks by at least q relative to its predecessor.
    const Rational q = mag2 / Rational((n + 1) * (n + 2));
    if (q <= Rational(1, 2)) {
      const Rational tail = term.mag_upper() * q / (Rational(1) - q);
      const Rational scale = sum.mag_lower().is_zero() ? Rational(1) : sum.mag_lower();
      if (tail <= eps * scale) return sum.widened(tail).with_digits(digits);
    }
    term = term * step / Rational((n + 1) * (n + 2));
    sum += term;
  }
}

}  // namespace hurwitz
