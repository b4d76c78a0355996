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

#include "hurwitz/family.hpp"

#include <sstream>
#include <stdexcept>

#include "hurwitz/errors.hpp"
#include "hurwitz/fibpoly.hpp"

namespace hurwitz {

void CFParams::validate() const {
  if (alpha < 1 || beta0 < 1 || beta1 < 1 || d < 1) {
    throw std::invalid_argument("CFParams: alpha, beta0, beta1 and d must be positive, got " + to_string());
  }
  if (r < 0) throw std::invalid_argument("CFParams: r must be nonnegative, got " + to_string());
}

std::string CFParams::to_string() const {
  std::ostringstream os;
  os << "(" << alpha << "," << beta0 << "," << beta1 << "," << d << "," << r << ")";
  return os.str();
}

DenomStream denom_stream(const CFParams& params) {
  params.validate();
  const CFParams p = params;
  return DenomStream([p](long i) -> BigInt {
    if (i < 0) throw std::out_of_range("denom_stream: negative index");
    if (i < p.r) return p.alpha;
    if (i == p.r) return p.beta0;
    const long j = i - p.r - 1;  // position inside the periodic part
    const long block = j / p.d + 1;
    if (j % p.d == p.d - 1) return BigInt(p.beta0) + BigInt(p.beta1) * block;
    return p.alpha;
  });
}

MagicPair magic(const CFParams& params) {
  params.validate();
  const BigInt a = params.alpha;
  const BigInt fd = fib_eval(params.d, a);
  const BigInt ld = lucas_eval(params.d, a);
  const BigInt b1 = params.beta1;
  const Rational sigma = Rational(BigInt(params.beta0 - params.alpha), b1) + Rational(ld, b1 * fd);
  const BigInt c = b1 * fd;
  const Rational rho = Rational((params.d % 2 == 1) ? 1 : -1, c * c);
  return {sigma, rho};
}

namespace {

long sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

Convergent closed_form_impl(const CFParams& params, long n) {
  params.validate();
  if (n < 0) throw std::invalid_argument("closed_form_convergent: n must be >= 0");
  const auto [sigma, rho] = magic(params);
  const BigInt a = params.alpha;
  const long d = params.d;
  const long r = params.r;
  const BigInt fd = fib_eval(d, a);
  const BigInt c = fd * params.beta1;  // F_d(alpha) beta1
  const BigInt t = sigma.den();

  // Every term times c^n t^n (first sum) resp. c^(n+1) t^n (second sum) is
  // an integer, so both sums are accumulated over that common denominator.
  const Rational scale_x = Rational(big_pow(c, static_cast<unsigned long>(n)) * big_pow(t, static_cast<unsigned long>(n)));
  const Rational scale_y = scale_x * Rational(c);

  BigInt x_num = 0;
  for (long k = 0; k <= n / 2; ++k) {
    const Rational term = Rational(factorial(static_cast<unsigned long>(n - k)), factorial(static_cast<unsigned long>(k))) *
                          gbinom(Rational(n - 1 - k) + sigma, n - 2 * k) * pow(rho, k);
    const Rational scaled = term * scale_x;
    if (!scaled.is_integer()) throw NonIntegerResult("closed form: first sum term not integral after scaling");
    x_num += scaled.num();
  }
  BigInt y_num = 0;
  for (long k = 0; k <= (n - 1) / 2 && n >= 1; ++k) {
    const Rational term = Rational(factorial(static_cast<unsigned long>(n - k - 1)), factorial(static_cast<unsigned long>(k))) *
                          gbinom(Rational(n - 1 - k) + sigma, n - 2 * k - 1) * pow(rho, k + 1);
    const Rational scaled = term * scale_y;
    if (!scaled.is_integer()) throw NonIntegerResult("closed form: second sum term not integral after scaling");
    y_num += scaled.num();
  }
  const Rational x_hat(x_num, big_pow(t, static_cast<unsigned long>(n)));  // c^n * first sum
  const Rational y_hat(y_num, big_pow(t, static_cast<unsigned long>(n)));  // c^(n+1) * second sum

  const Rational p = Rational(fib_eval(r + 1, a)) * x_hat + Rational(sign_pow(d - r) * fib_eval(d - r - 1, a)) * y_hat;
  const Rational q = Rational(fib_eval(r, a)) * x_hat + Rational(sign_pow(d + 1 - r) * fib_eval(d - r, a)) * y_hat;
  if (!p.is_integer() || !q.is_integer()) {
    throw NonIntegerResult("closed form: non-integral convergent for " + params.to_string() + ", n=" + std::to_string(n));
  }
  return {params.index_for(n), p.num(), q.num()};
}

}  // namespace

Convergent closed_form_convergent(const CFParams& params, long n) {
  if (!params.guaranteed_regime()) {
    throw std::invalid_argument("closed_form_convergent: requires 0 <= r <= d-1, got " + params.to_string());
  }
  Convergent c = closed_form_impl(params, n);
  if (gcd(c.p, c.q) != 1) {
    throw std::logic_error("closed_form_convergent: numerator and denominator not coprime for " + params.to_string());
  }
  return c;
}

Convergent closed_form_convergent_experimental(const CFParams& params, long n) { return closed_form_impl(params, n); }

std::vector<BigInt> prec_recurrence_p(const CFParams& params, long n_max) {
  params.validate();
  if (n_max < 0) throw std::invalid_argument("prec_recurrence_p: n_max must be >= 0");
  const BigInt a = params.alpha;
  const long d = params.d;
  const long r = params.r;
  std::vector<BigInt> fnd;  // F_{m d}(alpha), m = 0..n_max
  fnd.reserve(static_cast<size_t>(n_max + 1));
  for (long m = 0; m <= n_max; ++m) fnd.push_back(fib_eval(m * d, a));

  std::vector<BigInt> p;
  p.reserve(static_cast<size_t>(n_max + 1));
  for (long n = 0; n <= n_max; ++n) {
    BigInt v = fib_eval(n * d + r + 1, a);
    for (long k = 0; k < n; ++k) {
      v += p[static_cast<size_t>(k)] * (BigInt(params.beta0) + BigInt(params.beta1) * k - a) * fnd[static_cast<size_t>(n - k)];
    }
    p.push_back(std::move(v));
  }
  return p;
}

std::vector<BigInt> prec_recurrence_q(const CFParams& params, long n_max) {
  params.validate();
  if (params.r >= 1) {
    CFParams tail = params;
    tail.r -= 1;
    return prec_recurrence_p(tail, n_max);
  }
  // r = 0: the tail is xi(alpha, beta0 + beta1, beta1, d, d - 1), shifted by one block.
  std::vector<BigInt> q{BigInt(0)};
  if (n_max == 0) return q;
  const CFParams tail{params.alpha, params.beta0 + params.beta1, params.beta1, params.d, params.d - 1};
  const auto p = prec_recurrence_p(tail, n_max - 1);
  q.insert(q.end(), p.begin(), p.end());
  return q;
}

namespace {

Rational normalizer(const CFParams& params, long n) {
  if (n < 1) throw std::invalid_argument("normalized convergent: n must be >= 1");
  const auto [sigma, rho] = magic(params);
  const BigInt c = fib_eval(params.d, BigInt(params.alpha)) * params.beta1;
  return Rational(big_pow(c, static_cast<unsigned long>(n))) * rising_factorial(sigma, n);
}

Convergent convergent_at_block(const CFParams& params, long n) {
  const long idx = params.index_for(n);
  if (idx < 0) return {};
  return convergents(denom_stream(params), idx).back();
}

}  // namespace

Rational normalized_numerator_exact(const CFParams& params, long n) {
  return Rational(convergent_at_block(params, n).p) / normalizer(params, n);
}

Rational normalized_denominator_exact(const CFParams& params, long n) {
  return Rational(convergent_at_block(params, n).q) / normalizer(params, n);
}

PrecReal normalized_numerator(const CFParams& params, long n, long digits) {
  return PrecReal::from_rational(normalized_numerator_exact(params, n), digits);
}

PrecReal normalized_denominator(const CFParams& params, long n, long digits) {
  return PrecReal::from_rational(normalized_denominator_exact(params, n), digits);
}

}  // namespace hurwitz
