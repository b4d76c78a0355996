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

#include <stdexcept>

#include "hurwitz/exactnum.hpp"
#include "hurwitz/precreal.hpp"
#include "support.hpp"

using hurwitz::BigInt;
using hurwitz::PrecReal;
using hurwitz::Rational;
using test_support::from_mpq;
using test_support::to_mpq;

TEST_CASE("rationals are kept reduced with a positive denominator") {
  const Rational r(BigInt(6), BigInt(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational(BigInt(8), BigInt(4)).is_integer());
  CHECK(Rational(BigInt(8), BigInt(4)).to_string() == "2");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(-Rational(1, 3) == Rational(-1, 3));
  CHECK(Rational(-2, 5).abs() == Rational(2, 5));
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
  Rational x(3);
  CHECK_THROWS_AS(x /= Rational(0), std::domain_error);
  CHECK_THROWS_AS(hurwitz::pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("integer helpers") {
  CHECK(hurwitz::factorial(0) == 1);
  CHECK(hurwitz::factorial(20) == BigInt("2432902008176640000"));
  CHECK(hurwitz::binomial(10, 3) == 120);
  CHECK(hurwitz::binomial(3, 5) == 0);
  CHECK(hurwitz::binomial(3, -1) == 0);
  CHECK(hurwitz::big_pow(BigInt(3), 40) == BigInt("12157665459056928801"));
  CHECK(hurwitz::parse_bigint("-123456789012345678901234567890") == BigInt("-123456789012345678901234567890"));
  CHECK_THROWS_AS(hurwitz::parse_bigint("12a"), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz::parse_bigint(""), std::invalid_argument);
  CHECK(hurwitz::to_string(BigInt("98765432109876543210")) == "98765432109876543210");
}

TEST_CASE("falling, rising and generalized binomials") {
  CHECK(hurwitz::gbinom(Rational(5, 2), 2) == Rational(15, 8));
  CHECK(hurwitz::gbinom(Rational(-1, 2), 0) == Rational(1));
  CHECK(hurwitz::falling_factorial(Rational(7), 3) == Rational(210));
  CHECK(hurwitz::rising_factorial(Rational(3, 2), 2) == Rational(15, 4));
  CHECK(hurwitz::pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK_THROWS_AS(hurwitz::gbinom(Rational(1), -1), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz::falling_factorial(Rational(1), -2), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz::rising_factorial(Rational(1), -2), std::invalid_argument);

  oracle::Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational x = from_mpq(rng.rational(40, 9));
    const long k = rng.uniform(0, 12);
    CHECK(hurwitz::rising_factorial(x, k) == hurwitz::falling_factorial(x + Rational(k - 1), k));
    CHECK(hurwitz::gbinom(x, k) * Rational(hurwitz::factorial(static_cast<unsigned long>(k))) ==
          hurwitz::falling_factorial(x, k));
    const long n = rng.uniform(0, 30);
    CHECK(hurwitz::gbinom(Rational(n), k) == Rational(hurwitz::binomial(n, k)));
  }
}

TEST_CASE("interval operations enclose the exact result") {
  oracle::Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const mpq_class a = rng.rational(1000, 997);
    const mpq_class b = rng.rational(1000, 991);
    const long digits = rng.uniform(5, 60);
    const PrecReal x = PrecReal::from_rational(from_mpq(a), digits);
    const PrecReal y = PrecReal::from_rational(from_mpq(b), digits);
    CHECK(x.contains(from_mpq(a)));
    CHECK((x + y).contains(from_mpq(a + b)));
    CHECK((x - y).contains(from_mpq(a - b)));
    CHECK((x * y).contains(from_mpq(a * b)));
    if (b != 0) {
      CHECK((x / y).contains(from_mpq(a / b)));
      CHECK((x * from_mpq(b)).contains(from_mpq(a * b)));
    }
    CHECK(x.sqr().contains(from_mpq(a * a)));
    CHECK(x.abs().contains(from_mpq(abs(a))));
    if (a != 0) CHECK(x.rel_error_bound() <= x.target_rel_err());
  }
}

TEST_CASE("interval edge cases") {
  const PrecReal straddle = PrecReal::from_bounds(Rational(-1), Rational(2), 20);
  CHECK(straddle.contains_zero());
  CHECK(straddle.sign() == 0);
  CHECK_THROWS_AS(PrecReal::from_rational(Rational(3), 20) / straddle, std::domain_error);
  CHECK_THROWS_AS(straddle.sqrt(), std::domain_error);
  CHECK_THROWS(straddle.rel_error_bound());
  CHECK(straddle.abs().lower() == Rational(0));
  CHECK(straddle.abs().upper() == Rational(2));
  CHECK(straddle.sqr().lower() == Rational(0));
  CHECK(straddle.sqr().upper() == Rational(4));
  CHECK_THROWS_AS(PrecReal::from_bounds(Rational(2), Rational(1), 20), std::invalid_argument);
  CHECK_THROWS_AS(PrecReal::bits_for_digits(0), std::invalid_argument);

  const PrecReal two = PrecReal::from_rational(Rational(2), 40);
  const PrecReal root = two.sqrt();
  CHECK((root * root).contains(Rational(2)));
  CHECK(root.to_decimal(30).text == "1.41421356237309504880168872421");

  const PrecReal w = PrecReal::from_rational(Rational(1), 20).widened(Rational(1, 100));
  CHECK(w.contains(Rational(101, 100)));
  CHECK(w.hull(PrecReal::from_rational(Rational(5), 20)).contains(Rational(4)));
}

TEST_CASE("decimal rendering and certification") {
  const auto third = PrecReal::from_rational(Rational(1, 3), 12).to_decimal(12);
  CHECK(third.text == "0.333333333333");
  CHECK(third.certified);
  CHECK(third.certified_digits == 12);
  CHECK(PrecReal::from_rational(Rational(22, 7), 12).to_decimal(12).text == "3.14285714286");
  CHECK(PrecReal::from_rational(Rational(-5, 4), 12).to_decimal(12).text == "-1.25000000000");
  CHECK(PrecReal::from_rational(Rational(BigInt(1), BigInt("1000000000000000000000")), 12).to_decimal(12).text ==
        "1.00000000000e-21");
  CHECK(PrecReal().to_decimal(5).text == "0");

  // A wide enclosure certifies only its leading digits.
  const auto wide = PrecReal::from_bounds(Rational(1), Rational(11, 10), 20).to_decimal(10);
  CHECK_FALSE(wide.certified);
  CHECK(wide.certified_digits < 3);
  CHECK_THROWS_AS(PrecReal::from_rational(Rational(1), 10).to_decimal(0), std::invalid_argument);
}

TEST_CASE("rendered digits agree with exact long division") {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const mpq_class q = rng.positive_rational(100000, 99991);
    const auto s = PrecReal::from_rational(from_mpq(q), 40).to_decimal(25);
    REQUIRE(s.certified);
    std::string digits;
    for (char c : s.text) {
      if (c == 'e') break;
      if (c >= '0' && c <= '9') digits += c;
    }
    while (digits.size() > 1 && digits.front() == '0') digits.erase(digits.begin());
    // Rounded vs truncated strings differ by at most one unit in the last place.
    const mpz_class rounded(digits.substr(0, 25));
    const mpz_class truncated(oracle::leading_digits(q, 25));
    CHECK(abs(rounded - truncated) <= 1);
  }
}
