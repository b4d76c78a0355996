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

#include <vector>

#include "hurwitz/identities.hpp"
#include "support.hpp"

using hurwitz::BivarPoly;
using hurwitz::Rational;
using hurwitz::UniPoly;
using test_support::from_mpq;

namespace {

using Coeffs = std::vector<mpq_class>;

// c_k = n c_{k-1} + x c_{k-2} on coefficient vectors.
Coeffs step(long n, const Coeffs& c1, const Coeffs& c2) {
  Coeffs out(std::max(c1.size(), c2.size() + 1), 0);
  for (size_t i = 0; i < c1.size(); ++i) out[i] += n * c1[i];
  for (size_t i = 0; i < c2.size(); ++i) out[i + 1] += c2[i];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

bool same(const UniPoly& p, const Coeffs& c) {
  if (p.coeffs().size() != c.size()) return false;
  for (size_t i = 0; i < c.size(); ++i)
    if (p.coeffs()[i] != from_mpq(c[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("R and S at small n") {
  const BivarPoly x = BivarPoly::x();
  const BivarPoly y = BivarPoly::y();
  CHECK(hurwitz::r_poly(0) == BivarPoly(Rational(1)));
  CHECK(hurwitz::s_poly(0).is_zero());
  CHECK(hurwitz::r_poly(1) == y + Rational(1) + x);
  CHECK(hurwitz::s_poly(1) == x);
  CHECK(hurwitz::falling_in_y(2, 2) == (y + Rational(2)) * (y + Rational(1)));
  CHECK(hurwitz::falling_in_y(5, 0) == BivarPoly(Rational(1)));
}

TEST_CASE("summation identities") {
  for (long n = 0; n <= 20; ++n) {
    CHECK(hurwitz::verify_rsum(n));
    CHECK(hurwitz::verify_ssum(n));
    CHECK(hurwitz::rsum_lhs(n) == hurwitz::rsum_rhs(n));
  }
}

TEST_CASE("binomial and falling-factorial forms coincide") {
  for (long n = 0; n <= 12; ++n) {
    CHECK(hurwitz::r_poly(n) == hurwitz::r_poly_binomial_form(n));
    CHECK(hurwitz::s_poly(n) == hurwitz::s_poly_binomial_form(n));
  }
}

TEST_CASE("P and Q follow the three-term recurrence") {
  CHECK(hurwitz::q_poly(0) == UniPoly({Rational(1)}));
  CHECK(hurwitz::p_poly(1) == UniPoly({Rational(0), Rational(1)}));
  CHECK(hurwitz::q_poly(2) == UniPoly({Rational(2), Rational(1)}));
  // (P_0, Q_0) = (0, 1) and (P_{-1}, Q_{-1}) = (1, 0).
  Coeffs p1{}, q1{1}, p2{1}, q2{};
  for (long k = 1; k <= 25; ++k) {
    const Coeffs pk = step(k, p1, p2);
    const Coeffs qk = step(k, q1, q2);
    CHECK(same(hurwitz::p_poly(k), pk));
    CHECK(same(hurwitz::q_poly(k), qk));
    p2 = p1;
    p1 = pk;
    q2 = q1;
    q1 = qk;
  }
}

TEST_CASE("P/Q are convergents of x/(1 + x/(2 + ...))") {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const mpq_class x = rng.positive_rational(50, 17);
    const long n = rng.uniform(1, 25);
    mpq_class tail = n;
    for (long k = n - 1; k >= 1; --k) tail = k + x / tail;
    const mpq_class want = x / tail;
    CHECK(hurwitz::p_poly(n).eval(from_mpq(x)) / hurwitz::q_poly(n).eval(from_mpq(x)) == from_mpq(want));
    CHECK(hurwitz::gcf_convergent_check(n, from_mpq(x)));
  }
  CHECK_THROWS_AS(hurwitz::gcf_convergent_check(0, Rational(1)), std::invalid_argument);
}

TEST_CASE("P and Q give the convergents of xi(1, m-1, m, 3, 2)") {
  for (long m = 2; m <= 4; ++m)
    for (long n = 0; n <= 10; ++n) CHECK(hurwitz::pq_convergent_check(m, n));
  CHECK_THROWS_AS(hurwitz::pq_convergent_check(1, 3), std::invalid_argument);
}

TEST_CASE("bivariate arithmetic") {
  const BivarPoly x = BivarPoly::x();
  const BivarPoly y = BivarPoly::y();
  const BivarPoly s = (x + y) * (x - y);
  CHECK(s == x * x - y * y);
  CHECK(s.coeff(2, 0) == Rational(1));
  CHECK(s.coeff(1, 1) == Rational(0));
  CHECK(s.eval(Rational(3), Rational(1, 2)) == Rational(35, 4));
  CHECK((s - s).is_zero());
  CHECK((x * Rational(0)).is_zero());
  CHECK(BivarPoly().to_string() == "0");
}
