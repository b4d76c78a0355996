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

#include "hurwitz/cf.hpp"

#include <memory>
#include <stdexcept>
#include <string>

namespace hurwitz {

DenomStream DenomStream::from_list(std::vector<BigInt> values) {
  auto shared = std::make_shared<const std::vector<BigInt>>(std::move(values));
  return DenomStream([shared](long n) -> BigInt {
    if (n < 0 || static_cast<size_t>(n) >= shared->size()) {
      throw std::out_of_range("DenomStream: index " + std::to_string(n) + " past end of finite stream");
    }
    return (*shared)[static_cast<size_t>(n)];
  });
}

DenomStream DenomStream::from_list(const std::vector<long>& values) {
  std::vector<BigInt> v(values.begin(), values.end());
  return from_list(std::move(v));
}

DenomStream DenomStream::tail() const {
  Fn inner = fn_;
  return DenomStream([inner](long n) { return inner(n + 1); });
}

std::vector<Convergent> convergents(const DenomStream& a, long n_max) {
  if (n_max < 0) throw std::invalid_argument("convergents: n_max must be >= 0");
  std::vector<Convergent> out;
  out.reserve(static_cast<size_t>(n_max + 2));
  out.push_back({-1, 1, 0});
  out.push_back({0, a(0), 1});
  for (long n = 1; n <= n_max; ++n) {
    const BigInt an = a(n);
    const Convergent& c1 = out[static_cast<size_t>(n)];
    const Convergent& c2 = out[static_cast<size_t>(n - 1)];
    out.push_back({n, an * c1.p + c2.p, an * c1.q + c2.q});
  }
  return out;
}

bool is_even_set(const std::set<long>& s) {
  long run = 0;
  long prev = 0;
  for (long x : s) {
    if (run > 0 && x == prev + 1) {
      ++run;
    } else {
      if (run % 2 != 0) return false;
      run = 1;
    }
    prev = x;
  }
  return run % 2 == 0;
}

namespace {

// Sum over S subset of [lo..hi] with [lo..hi] \ S even of prod_{i in S} a_i.
// Walking left to right, position i is either kept in S or starts a
// removed pair {i, i+1}.
BigInt even_containment_sum(const std::vector<BigInt>& a, long lo, long hi) {
  if (hi < lo) return 1;
  // Memo-free DFS keeps this an explicit enumeration of the subsets.
  BigInt total = 0;
  struct Frame {
    long i;
    BigInt prod;
  };
  std::vector<Frame> stack;
  stack.push_back({lo, 1});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.i > hi) {
      total += f.prod;
      continue;
    }
    if (f.i + 1 <= hi) stack.push_back({f.i + 2, f.prod});
    stack.push_back({f.i + 1, f.prod * a[static_cast<size_t>(f.i)]});
  }
  return total;
}

std::vector<BigInt> materialize(const DenomStream& a, long n) {
  std::vector<BigInt> v;
  v.reserve(static_cast<size_t>(n + 1));
  for (long i = 0; i <= n; ++i) v.push_back(a(i));
  return v;
}

}  // namespace

Convergent euler_mindig(const DenomStream& a, long n) {
  if (n < 0) throw std::invalid_argument("euler_mindig: n must be >= 0");
  if (n > kEulerMindigMaxIndex) {
    throw IndexTooLarge("euler_mindig: index " + std::to_string(n) + " exceeds enumeration guard " +
                        std::to_string(kEulerMindigMaxIndex));
  }
  const std::vector<BigInt> v = materialize(a, n);
  return {n, even_containment_sum(v, 0, n), even_containment_sum(v, 1, n)};
}

Convergent euler_mindig_naive(const DenomStream& a, long n) {
  if (n < 0) throw std::invalid_argument("euler_mindig_naive: n must be >= 0");
  if (n > kEulerMindigNaiveMaxIndex) {
    throw IndexTooLarge("euler_mindig_naive: index " + std::to_string(n) + " exceeds guard " +
                        std::to_string(kEulerMindigNaiveMaxIndex));
  }
  const std::vector<BigInt> v = materialize(a, n);
  BigInt p = 0, q = 0;
  const unsigned long universe = 1UL << (n + 1);
  for (unsigned long mask = 0; mask < universe; ++mask) {
    std::set<long> complement;
    BigInt prod = 1;
    for (long i = 0; i <= n; ++i) {
      if (mask & (1UL << i)) {
        prod *= v[static_cast<size_t>(i)];
      } else {
        complement.insert(i);
      }
    }
    if (is_even_set(complement)) p += prod;
    // For q the ground set is {1..n}: S must avoid 0.
    if (!(mask & 1UL)) {
      complement.erase(0);
      if (is_even_set(complement)) q += prod;
    }
  }
  return {n, p, q};
}

Rational eval_finite(const std::vector<BigInt>& a) {
  if (a.empty()) throw std::invalid_argument("eval_finite: empty continued fraction");
  Rational x(a.back());
  for (size_t i = a.size() - 1; i-- > 0;) x = Rational(a[i]) + x.reciprocal();
  return x;
}

Rational eval_finite(const std::vector<long>& a) {
  return eval_finite(std::vector<BigInt>(a.begin(), a.end()));
}

bool shift_check(const DenomStream& a, long n) {
  if (n < 1) throw std::invalid_argument("shift_check: n must be >= 1");
  const auto full = convergents(a, n);
  const auto shifted = convergents(a.tail(), n - 1);
  return full.back().q == shifted.back().p;
}

}  // namespace hurwitz
