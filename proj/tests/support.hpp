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

#ifndef HURWITZ_TESTS_SUPPORT_HPP
#define HURWITZ_TESTS_SUPPORT_HPP

#include "hurwitz/exactnum.hpp"
#include "hurwitz/precreal.hpp"
#include "oracles.hpp"

namespace test_support {

inline hurwitz::Rational from_mpq(const mpq_class& q) { return hurwitz::Rational(q.get_num(), q.get_den()); }

inline mpq_class to_mpq(const hurwitz::Rational& r) { return r.raw(); }

/// Upper bound on |x - y| for every x in the enclosure and y in the interval.
inline mpq_class max_distance(const hurwitz::PrecReal& x, const oracle::Interval& y) {
  const mpq_class a = to_mpq(x.upper()) - y.lo;
  const mpq_class b = y.hi - to_mpq(x.lower());
  return a > b ? a : b;
}

inline mpq_class pow10(int e) {
  mpq_class out = 1;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) out *= 10;
  return e < 0 ? mpq_class(1 / out) : out;
}

}  // namespace test_support

#endif  // HURWITZ_TESTS_SUPPORT_HPP
