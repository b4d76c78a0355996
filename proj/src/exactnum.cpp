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

#include "hurwitz/exactnum.hpp"

#include <ostream>
#include <stdexcept>

namespace hurwitz {

BigInt big_pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

BigInt parse_bigint(const std::string& text) {
  BigInt r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  }
  return r;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

std::string Rational::to_string() const { return q_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, long exp) {
  if (exp < 0) return pow(base.reciprocal(), -exp);
  const auto e = static_cast<unsigned long>(exp);
  return Rational(big_pow(base.num(), e), big_pow(base.den(), e));
}

Rational falling_factorial(const Rational& x, long k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: negative k");
  // Accumulate numerator and denominator separately; reduce once at the end.
  const BigInt n = x.num();
  const BigInt d = x.den();
  BigInt top = 1;
  for (long i = 0; i < k; ++i) top *= n - d * i;
  return Rational(top, big_pow(d, static_cast<unsigned long>(k)));
}

Rational rising_factorial(const Rational& x, long k) {
  if (k < 0) throw std::invalid_argument("rising_factorial: negative k");
  const BigInt n = x.num();
  const BigInt d = x.den();
  BigInt top = 1;
  for (long i = 0; i < k; ++i) top *= n + d * i;
  return Rational(top, big_pow(d, static_cast<unsigned long>(k)));
}

Rational gbinom(const Rational& x, long k) {
  if (k < 0) throw std::invalid_argument("gbinom: negative k");
  return falling_factorial(x, k) / Rational(factorial(static_cast<unsigned long>(k)));
}

}  // namespace hurwitz
