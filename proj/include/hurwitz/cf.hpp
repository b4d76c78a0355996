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

#ifndef HURWITZ_CF_HPP
#define HURWITZ_CF_HPP

#include <functional>
#include <set>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/exactnum.hpp"

namespace hurwitz {

/// Partial denominators a_0, a_1, ... of a simple continued fraction, as an
/// index -> value function so infinite streams plug in directly.
/// a_0 is any integer; a_n >= 1 for n >= 1.
class DenomStream {
 public:
  using Fn = std::function<BigInt(long)>;

  explicit DenomStream(Fn fn) : fn_(std::move(fn)) {}
  /// Finite stream; indexing past the end throws std::out_of_range.
  static DenomStream from_list(std::vector<BigInt> values);
  static DenomStream from_list(const std::vector<long>& values);

  BigInt operator()(long n) const { return fn_(n); }
  /// The stream a_1, a_2, ...
  DenomStream tail() const;

 private:
  Fn fn_;
};

/// The n-th convergent p/q; n = -1 is the formal (1, 0).
struct Convergent {
  long n = -1;
  BigInt p = 1;
  BigInt q = 0;

  Rational value() const { return Rational(p, q); }
  friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// Convergents for n = -1, 0, ..., n_max by the three-term recurrence.
std::vector<Convergent> convergents(const DenomStream& a, long n_max);

/// True iff S is a disjoint union of runs of consecutive integers of even length.
bool is_even_set(const std::set<long>& s);

constexpr long kEulerMindigMaxIndex = 22;
constexpr long kEulerMindigNaiveMaxIndex = 14;

/// p_n and q_n as sums over evenly contained subsets, enumerated by
/// splitting the complement into adjacent pairs. Throws IndexTooLarge when
/// n > kEulerMindigMaxIndex.
Convergent euler_mindig(const DenomStream& a, long n);

/// Same sums by testing every subset of {0..n}; n <= kEulerMindigNaiveMaxIndex.
Convergent euler_mindig_naive(const DenomStream& a, long n);

/// Exact value of [a_0, ..., a_n], folded from the back.
Rational eval_finite(const std::vector<BigInt>& a);
Rational eval_finite(const std::vector<long>& a);

/// q_n of [a_0, a_1, ...] equals p_{n-1} of [a_1, a_2, ...].
bool shift_check(const DenomStream& a, long n);

}  // namespace hurwitz

#endif  // HURWITZ_CF_HPP
