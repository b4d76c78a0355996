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

#ifndef HURWITZ_IDENTITIES_HPP
#define HURWITZ_IDENTITIES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/exactnum.hpp"

namespace hurwitz {

/// Polynomial in (x, y) with rational coefficients keyed by (deg_x, deg_y).
/// Zero coefficients are never stored, so equality is map equality.
class BivarPoly {
 public:
  using Key = std::pair<int, int>;

  BivarPoly() = default;
  BivarPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static BivarPoly monomial(const Rational& c, int deg_x, int deg_y);
  static BivarPoly x() { return monomial(Rational(1), 1, 0); }
  static BivarPoly y() { return monomial(Rational(1), 0, 1); }

  const std::map<Key, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coeff(int deg_x, int deg_y) const;
  Rational eval(const Rational& x, const Rational& y) const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const Rational& c);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(BivarPoly a, const Rational& c) { return a *= c; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.t_ == b.t_; }

  std::string to_string() const;

 private:
  void add_term(const Key& k, const Rational& c);
  std::map<Key, Rational> t_;
};

/// Univariate polynomial with rational coefficients, index = degree,
/// highest stored coefficient nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational eval(const Rational& x) const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

/// (y + shift)(y + shift - 1)...(y + shift - j + 1) as a polynomial in y.
BivarPoly falling_in_y(long shift, long j);

// Falling-factorial forms.
BivarPoly r_poly(long n);
BivarPoly s_poly(long n);

// Binomial forms with the 1/n! prefactor; must coincide with r_poly / s_poly.
BivarPoly r_poly_binomial_form(long n);
BivarPoly s_poly_binomial_form(long n);

// Both sides of the two summation identities.
BivarPoly rsum_lhs(long n);
BivarPoly rsum_rhs(long n);
BivarPoly ssum_lhs(long n);
BivarPoly ssum_rhs(long n);
bool verify_rsum(long n);
bool verify_ssum(long n);

UniPoly p_poly(long n);
UniPoly q_poly(long n);

/// P_n(x)/Q_n(x) against x/(1 + x/(2 + ... + x/n)) by the generalized recurrence.
bool gcf_convergent_check(long n, const Rational& x);

/// For xi(1, m-1, m, 3, 2): p_{3n+1} = 2 (2m)^n Q_n(1/(4m^2)) and
/// q_{3n+1} = (2m)^n (2m P_n(1/(4m^2)) + Q_n(1/(4m^2))), against the recurrence.
bool pq_convergent_check(long m, long n);

}  // namespace hurwitz

#endif  // HURWITZ_IDENTITIES_HPP
