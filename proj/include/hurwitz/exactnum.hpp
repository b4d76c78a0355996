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

#ifndef HURWITZ_EXACTNUM_HPP
#define HURWITZ_EXACTNUM_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace hurwitz {

/// Arbitrary-size signed integer. GMP keeps the representation canonical.
using BigInt = mpz_class;

BigInt big_pow(const BigInt& base, unsigned long exp);
BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);  // 0 outside 0 <= k <= n
std::string to_string(const BigInt& x);
BigInt parse_bigint(const std::string& text);  // throws std::invalid_argument

/// Exact rational number, always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  // Unevaluated gmpxx integer expressions such as `a * b`.
  template <typename U>
  Rational(const __gmp_expr<mpz_t, U>& e) : q_(BigInt(e)) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);  // throws on den == 0

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational abs() const;
  Rational reciprocal() const;  // throws std::domain_error on zero

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const;  // "n" or "n/d"

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(const Rational& base, long exp);

/// x (x-1) ... (x-k+1); 1 for k = 0. Negative k is a contract violation.
Rational falling_factorial(const Rational& x, long k);

/// x (x+1) ... (x+k-1); 1 for k = 0.
Rational rising_factorial(const Rational& x, long k);

/// Generalized binomial coefficient falling_factorial(x, k) / k!.
Rational gbinom(const Rational& x, long k);

}  // namespace hurwitz

#endif  // HURWITZ_EXACTNUM_HPP
