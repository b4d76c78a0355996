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

#include <doctest.h>

#include <set>
#include <vector>

#include "hurwitz/cf.hpp"
#include "support.hpp"

using hurwitz::BigInt;
using hurwitz::Convergent;
using hurwitz::DenomStream;

namespace {

std::vector<BigInt> random_denoms(oracle::Rng& rng, long count) {
  std::vector<BigInt> a;
  a.push_back(rng.uniform(-5, 9));
  for (long i = 1; i < count; ++i) a.push_back(rng.uniform(1, 12));
  return a;
}

}  // namespace

TEST_CASE("convergents of [1,1,2,1,1]") {
  const auto c = hurwitz::convergents(DenomStream::from_list(std::vector<long>{1, 1, 2, 1, 1}), 4);
  REQUIRE(c.size() == 6);
  CHECK(c.front() == Convergent{-1, 1, 0});
  CHECK(c.back() == Convergent{4, 12, 7});
  const auto [p, q] = oracle::fold_cf_pq({1, 1, 2, 1, 1});
  CHECK(c.back().p == p);
  CHECK(c.back().q == q);
}

TEST_CASE("recurrence matches folding from the back") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_denoms(rng, rng.uniform(1, 40));
    const auto conv = hurwitz::convergents(DenomStream::from_list(a), static_cast<long>(a.size()) - 1);
    for (size_t n = 0; n < a.size(); ++n) {
      const std::vector<mpz_class> prefix(a.begin(), a.begin() + static_cast<long>(n) + 1);
      const mpq_class v = oracle::fold_cf(prefix);
      const Convergent& c = conv[n + 1];
      CHECK(mpq_class(c.p, c.q) == v);
      if (c.q < 0) CHECK(false);
    }
    CHECK(hurwitz::eval_finite(a) == conv.back().value());
  }
}

TEST_CASE("determinant identity and shift relation") {
  oracle::Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_denoms(rng, 30);
    const DenomStream s = DenomStream::from_list(a);
    const auto conv = hurwitz::convergents(s, 29);
    for (long n = 1; n <= 29; ++n) {
      const Convergent& c1 = conv[static_cast<size_t>(n + 1)];
      const Convergent& c0 = conv[static_cast<size_t>(n)];
      CHECK(c1.p * c0.q - c1.q * c0.p == ((n % 2 == 0) ? -1 : 1));
      CHECK(hurwitz::shift_check(s, n));
    }
  }
  CHECK_THROWS_AS(hurwitz::shift_check(DenomStream::from_list(std::vector<long>{1, 2}), 0), std::invalid_argument);
}

TEST_CASE("even sets") {
  CHECK(hurwitz::is_even_set({}));
  CHECK(hurwitz::is_even_set({1, 2}));
  CHECK(hurwitz::is_even_set({1, 2, 4, 5}));
  CHECK(hurwitz::is_even_set({0, 1, 2, 3}));
  CHECK_FALSE(hurwitz::is_even_set({1, 2, 3}));
  CHECK_FALSE(hurwitz::is_even_set({1, 3}));
  CHECK_FALSE(hurwitz::is_even_set({5}));
}

TEST_CASE("subset formulas agree with the recurrence") {
  oracle::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_denoms(rng, hurwitz::kEulerMindigMaxIndex + 1);
    const DenomStream s = DenomStream::from_list(a);
    const auto conv = hurwitz::convergents(s, hurwitz::kEulerMindigMaxIndex);
    for (long n = 0; n <= hurwitz::kEulerMindigMaxIndex; ++n) {
      CHECK(hurwitz::euler_mindig(s, n) == conv[static_cast<size_t>(n + 1)]);
      if (n <= hurwitz::kEulerMindigNaiveMaxIndex) CHECK(hurwitz::euler_mindig_naive(s, n) == conv[static_cast<size_t>(n + 1)]);
    }
  }
}

TEST_CASE("guards and errors") {
  const DenomStream ones([](long) { return BigInt(1); });
  CHECK_THROWS_AS(hurwitz::euler_mindig(ones, hurwitz::kEulerMindigMaxIndex + 1), hurwitz::IndexTooLarge);
  CHECK_THROWS_AS(hurwitz::euler_mindig_naive(ones, hurwitz::kEulerMindigNaiveMaxIndex + 1), hurwitz::IndexTooLarge);
  CHECK_THROWS_AS(hurwitz::euler_mindig(ones, -1), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz::convergents(ones, -1), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz::eval_finite(std::vector<BigInt>{}), std::invalid_argument);
  const DenomStream finite = DenomStream::from_list(std::vector<long>{1, 2, 3});
  CHECK(finite(2) == 3);
  CHECK_THROWS_AS(finite(3), std::out_of_range);
  CHECK_THROWS_AS(hurwitz::convergents(finite, 5), std::out_of_range);
  CHECK(finite.tail()(0) == 2);
}
