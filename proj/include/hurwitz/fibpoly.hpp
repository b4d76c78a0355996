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

#ifndef HURWITZ_FIBPOLY_HPP
#define HURWITZ_FIBPOLY_HPP

#include <string>
#include <vector>

#include "hurwitz/exactnum.hpp"

namespace hurwitz {

/// Univariate polynomial in q with integer coefficients, index = degree.
/// The highest stored coefficient is nonzero; the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  static IntPoly monomial(const BigInt& c, size_t degree);

  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  BigInt coeff(size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
  BigInt eval(const BigInt& q) const;

  IntPoly shifted(size_t k) const;  // multiply by q^k
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;  // e.g. "q^3 + 2*q"

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Fibonacci polynomial F_n(q); F_{-n} = (-1)^(n+1) F_n for negative indices.
IntPoly fib_poly(long n);

// Lucas polynomial L_n(q), n >= 0.
IntPoly lucas_poly(long n);

// F_n(a) and L_n(a) via the scalar recurrence.
BigInt fib_eval(long n, const BigInt& a);
BigInt lucas_eval(long n, const BigInt& a);

// F_n(q) summed over even subsets of {1,...,n-1}; each S contributes q^((n-1)-|S|).
IntPoly fib_via_even_sets(long n);

/// Checks, by exact truncated power-series multiplication, that
///   (1 - L_d(a) t + (-1)^d t^2) * sum_{n=0}^{N} F_{nd+r+1}(a) t^n
/// agrees with F_{r+1}(a) + (-1)^(r+1) F_{d-r-1}(a) t through t^N.
bool fib_generating_check(long d, long r, const BigInt& alpha, long n_terms);

}  // namespace hurwitz

#endif  // HURWITZ_FIBPOLY_HPP
