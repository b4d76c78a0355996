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

#include "hurwitz/fibpoly.hpp"

#include <set>
#include <stdexcept>

#include "hurwitz/cf.hpp"

namespace hurwitz {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const BigInt& c, size_t degree) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::eval(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

IntPoly IntPoly::shifted(size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(k, BigInt(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) { return *this += -o; }

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (long k = degree(); k >= 0; --k) {
    const BigInt& c = c_[static_cast<size_t>(k)];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && k > 0;
    if (!unit) out += hurwitz::to_string(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += "q";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

namespace {

// Runs X_n = q X_{n-1} + X_{n-2} forward from (X_0, X_1).
IntPoly run_forward(IntPoly x0, IntPoly x1, long n) {
  if (n == 0) return x0;
  for (long i = 2; i <= n; ++i) {
    IntPoly next = x1.shifted(1) + x0;
    x0 = std::move(x1);
    x1 = std::move(next);
  }
  return x1;
}

}  // namespace

IntPoly fib_poly(long n) {
  if (n < 0) {
    // Backwards recurrence X_{n-2} = X_n - q X_{n-1} gives F_{-m} = (-1)^(m+1) F_m.
    IntPoly f = fib_poly(-n);
    return ((-n) % 2 == 0) ? -f : f;
  }
  return run_forward(IntPoly{}, IntPoly({BigInt(1)}), n);
}

IntPoly lucas_poly(long n) {
  if (n < 0) throw std::invalid_argument("lucas_poly: negative index");
  return run_forward(IntPoly({BigInt(2)}), IntPoly({BigInt(0), BigInt(1)}), n);
}

BigInt fib_eval(long n, const BigInt& a) {
  if (n < 0) {
    BigInt f = fib_eval(-n, a);
    return ((-n) % 2 == 0) ? BigInt(-f) : f;
  }
  BigInt x0 = 0, x1 = 1;
  if (n == 0) return x0;
  for (long i = 2; i <= n; ++i) {
    BigInt next = a * x1 + x0;
    x0 = std::move(x1);
    x1 = std::move(next);
  }
  return x1;
}

BigInt lucas_eval(long n, const BigInt& a) {
  if (n < 0) throw std::invalid_argument("lucas_eval: negative index");
  BigInt x0 = 2, x1 = a;
  if (n == 0) return x0;
  for (long i = 2; i <= n; ++i) {
    BigInt next = a * x1 + x0;
    x0 = std::move(x1);
    x1 = std::move(next);
  }
  return x1;
}

IntPoly fib_via_even_sets(long n) {
  if (n < 1) throw std::invalid_argument("fib_via_even_sets: n must be >= 1");
  if (n > 30) throw IndexTooLarge("fib_via_even_sets: n > 30 would enumerate too many subsets");
  const long m = n - 1;  // ground set {1,...,m}
  std::vector<BigInt> counts(static_cast<size_t>(m + 1), BigInt(0));
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    std::set<long> s;
    for (long i = 0; i < m; ++i) {
      if (mask & (1UL << i)) s.insert(i + 1);
    }
    if (is_even_set(s)) counts[static_cast<size_t>(m - static_cast<long>(s.size()))] += 1;
  }
  return IntPoly(std::move(counts));
}

bool fib_generating_check(long d, long r, const BigInt& alpha, long n_terms) {
  if (d < 1 || r < 0 || r > d || n_terms < 1) {
    throw std::invalid_argument("fib_generating_check: need d >= 1, 0 <= r <= d, N >= 1");
  }
  std::vector<BigInt> series;
  series.reserve(static_cast<size_t>(n_terms + 1));
  for (long n = 0; n <= n_terms; ++n) series.push_back(fib_eval(n * d + r + 1, alpha));

  const BigInt ld = lucas_eval(d, alpha);
  const BigInt sign_d = (d % 2 == 0) ? 1 : -1;
  for (long k = 0; k <= n_terms; ++k) {
    BigInt c = series[static_cast<size_t>(k)];
    if (k >= 1) c -= ld * series[static_cast<size_t>(k - 1)];
    if (k >= 2) c += sign_d * series[static_cast<size_t>(k - 2)];
    BigInt expected = 0;
    if (k == 0) expected = fib_eval(r + 1, alpha);
    if (k == 1) expected = (((r + 1) % 2 == 0) ? 1 : -1) * fib_eval(d - r - 1, alpha);
    if (c != expected) return false;
  }
  return true;
}

}  // namespace hurwitz
