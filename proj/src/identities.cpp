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

#include "hurwitz/identities.hpp"

#include <stdexcept>

#include "hurwitz/cf.hpp"
#include "hurwitz/family.hpp"

namespace hurwitz {

BivarPoly::BivarPoly(const Rational& c) { add_term({0, 0}, c); }

BivarPoly BivarPoly::monomial(const Rational& c, int deg_x, int deg_y) {
  BivarPoly p;
  p.add_term({deg_x, deg_y}, c);
  return p;
}

void BivarPoly::add_term(const Key& k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Rational BivarPoly::coeff(int deg_x, int deg_y) const {
  auto it = t_.find({deg_x, deg_y});
  return it == t_.end() ? Rational(0) : it->second;
}

Rational BivarPoly::eval(const Rational& x, const Rational& y) const {
  Rational acc(0);
  for (const auto& [k, c] : t_) acc += c * pow(x, k.first) * pow(y, k.second);
  return acc;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [k, v] : t_) v *= c;
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ka, ca] : a.t_) {
    for (const auto& [kb, cb] : b.t_) out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  }
  return out;
}

std::string BivarPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (k.first > 0) out += "*x^" + std::to_string(k.first);
    if (k.second > 0) out += "*y^" + std::to_string(k.second);
  }
  return out;
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string UniPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[k].to_string();
    if (k > 0) out += "*x^" + std::to_string(k);
  }
  return out;
}

BivarPoly falling_in_y(long shift, long j) {
  if (j < 0) throw std::invalid_argument("falling_in_y: negative length");
  BivarPoly out(Rational(1));
  for (long i = 0; i < j; ++i) out = out * (BivarPoly::y() + BivarPoly(Rational(shift - i)));
  return out;
}

namespace {

Rational fact(long n) { return Rational(factorial(static_cast<unsigned long>(n))); }

BivarPoly x_pow(long k) { return BivarPoly::monomial(Rational(1), static_cast<int>(k), 0); }

// binom(y + shift, j) with symbolic y.
BivarPoly binom_in_y(long shift, long j) { return falling_in_y(shift, j) * fact(j).reciprocal(); }

void require_nonneg(long n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": n must be >= 0");
}

}  // namespace

BivarPoly r_poly(long n) {
  require_nonneg(n, "r_poly");
  BivarPoly out;
  for (long k = 0; k <= n; ++k) out += x_pow(k) * falling_in_y(n, n - k) * fact(k).reciprocal();
  return out;
}

BivarPoly s_poly(long n) {
  require_nonneg(n, "s_poly");
  BivarPoly out;
  for (long k = 0; k <= n - 1; ++k) out += x_pow(k + 1) * falling_in_y(n, n - k - 1) * fact(k).reciprocal();
  return out;
}

BivarPoly r_poly_binomial_form(long n) {
  require_nonneg(n, "r_poly_binomial_form");
  BivarPoly out;
  for (long k = 0; k <= n; ++k) {
    const Rational c = Rational(binomial(n, k)) * fact(n - k) * fact(n - k);
    out += x_pow(k) * binom_in_y(n, n - k) * c;
  }
  return out * fact(n).reciprocal();
}

BivarPoly s_poly_binomial_form(long n) {
  require_nonneg(n, "s_poly_binomial_form");
  BivarPoly out;
  for (long k = 0; k <= n - 1; ++k) {
    const Rational c = Rational(binomial(n, k)) * fact(n - k) * fact(n - k - 1);
    out += x_pow(k + 1) * binom_in_y(n, n - k - 1) * c;
  }
  return out * fact(n).reciprocal();
}

namespace {

// sum_{m=0}^{n} (-x)^(n-m)/(n-m)! * poly_m
template <typename PolyFn>
BivarPoly alternating_convolution(long n, PolyFn poly) {
  BivarPoly out;
  for (long m = 0; m <= n; ++m) {
    const long e = n - m;
    const Rational c = Rational((e % 2 == 0) ? 1 : -1) / fact(e);
    out += x_pow(e) * poly(m) * c;
  }
  return out;
}

}  // namespace

BivarPoly rsum_lhs(long n) {
  require_nonneg(n, "rsum_lhs");
  return alternating_convolution(n, r_poly);
}

BivarPoly rsum_rhs(long n) {
  require_nonneg(n, "rsum_rhs");
  BivarPoly out;
  for (long k = 0; k <= n / 2; ++k) {
    out += x_pow(k) * binom_in_y(n - k, n - 2 * k) * (fact(n - k) / fact(k));
  }
  return out;
}

BivarPoly ssum_lhs(long n) {
  require_nonneg(n, "ssum_lhs");
  return alternating_convolution(n, s_poly);
}

BivarPoly ssum_rhs(long n) {
  require_nonneg(n, "ssum_rhs");
  BivarPoly out;
  for (long k = 0; n >= 1 && k <= (n - 1) / 2; ++k) {
    out += x_pow(k + 1) * binom_in_y(n - k, n - 2 * k - 1) * (fact(n - k - 1) / fact(k));
  }
  return out;
}

bool verify_rsum(long n) { return rsum_lhs(n) == rsum_rhs(n); }

bool verify_ssum(long n) { return ssum_lhs(n) == ssum_rhs(n); }

UniPoly p_poly(long n) {
  require_nonneg(n, "p_poly");
  std::vector<Rational> c(static_cast<size_t>(n + 1), Rational(0));
  for (long k = 0; n >= 1 && k <= (n - 1) / 2; ++k) {
    c[static_cast<size_t>(k + 1)] = fact(n - k - 1) / fact(k) * Rational(binomial(n - k, n - 2 * k - 1));
  }
  return UniPoly(std::move(c));
}

UniPoly q_poly(long n) {
  require_nonneg(n, "q_poly");
  std::vector<Rational> c(static_cast<size_t>(n + 1), Rational(0));
  for (long k = 0; k <= n / 2; ++k) {
    c[static_cast<size_t>(k)] = fact(n - k) / fact(k) * Rational(binomial(n - k, n - 2 * k));
  }
  return UniPoly(std::move(c));
}

bool gcf_convergent_check(long n, const Rational& x) {
  if (n < 1) throw std::invalid_argument("gcf_convergent_check: n must be >= 1");
  // A_k = a_k A_{k-1} + b_k A_{k-2} with a_k = k, b_k = x; a_0 = 0.
  Rational a_prev(1), a_cur(0), b_prev(0), b_cur(1);
  for (long k = 1; k <= n; ++k) {
    Rational a_next = Rational(k) * a_cur + x * a_prev;
    Rational b_next = Rational(k) * b_cur + x * b_prev;
    a_prev = std::move(a_cur);
    a_cur = std::move(a_next);
    b_prev = std::move(b_cur);
    b_cur = std::move(b_next);
  }
  const Rational qv = q_poly(n).eval(x);
  if (qv.is_zero() || b_cur.is_zero()) return false;
  return p_poly(n).eval(x) / qv == a_cur / b_cur;
}

bool pq_convergent_check(long m, long n) {
  if (m < 2 || n < 0) throw std::invalid_argument("pq_convergent_check: need m >= 2, n >= 0");
  const CFParams params{1, m - 1, m, 3, 2};
  const Convergent c = convergents(denom_stream(params), 3 * n + 1).back();
  const Rational x = Rational(1, 4 * BigInt(m) * m);
  const Rational scale(big_pow(BigInt(2 * m), static_cast<unsigned long>(n)));
  const Rational qn = q_poly(n).eval(x);
  const Rational pn = p_poly(n).eval(x);
  const Rational p_expected = Rational(2) * scale * qn;
  const Rational q_expected = scale * (Rational(2 * m) * pn + qn);
  return p_expected == Rational(c.p) && q_expected == Rational(c.q);
}

}  // namespace hurwitz
