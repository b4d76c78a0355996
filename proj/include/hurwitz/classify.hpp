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

#ifndef HURWITZ_CLASSIFY_HPP
#define HURWITZ_CLASSIFY_HPP

#include <array>
#include <string>
#include <vector>

#include "hurwitz/exactnum.hpp"
#include "hurwitz/family.hpp"

namespace hurwitz {

enum class SigmaTag { kHalfOdd, kInteger, kOther };

std::string to_string(SigmaTag tag);

struct SigmaClass {
  SigmaTag tag = SigmaTag::kOther;
  Rational witness;  // sigma
};

SigmaClass sigma_class(const CFParams& params);

// Case lists for d >= 2. The *_case functions return the number of the
// satisfied case (1-based) or 0; r is ignored. d == 1 throws UnsupportedD.
//
// Half-odd sigma:
//   1. d = 3, alpha = 1, (beta0 + 1) / beta1 half of an odd integer
//   2. d = 2, alpha = 1, (beta0 + 2) / beta1 half of an odd integer
//   3. d = 2, alpha = 2, (beta0 + 1) / beta1 half of an odd integer
//   4. d = 2, alpha = 4, (2 beta0 + 1) / beta1 an integer
// Integer sigma:
//   1. d = 3, alpha = 1, (beta0 + 1) / beta1 an integer
//   2. d = 2, alpha = 1, (beta0 + 2) / beta1 an integer
//   3. d = 2, alpha = 2, (beta0 + 1) / beta1 an integer
int half_odd_case(const CFParams& params);
int integer_case(const CFParams& params);
inline bool half_odd_predicate(const CFParams& params) { return half_odd_case(params) != 0; }
inline bool integer_predicate(const CFParams& params) { return integer_case(params) != 0; }

inline constexpr int kHalfOddCases = 4;
inline constexpr int kIntegerCases = 3;

struct SweepMismatch {
  CFParams params;
  SigmaClass computed;
  bool half_odd_predicted = false;
  bool integer_predicted = false;
};

struct SweepReport {
  long alpha_max = 0;
  long d_max = 0;
  long beta_max = 0;
  long tuples = 0;
  std::array<long, kHalfOddCases> half_odd_hits{};  // index = case - 1
  std::array<long, kIntegerCases> integer_hits{};
  std::vector<SweepMismatch> mismatches;  // ordered by (alpha, d, beta0, beta1)
};

struct SweepOptions {
  unsigned jobs = 0;  // 0 = hardware concurrency
  bool throw_on_mismatch = true;
};

/// Every alpha <= alpha_max, 2 <= d <= d_max, beta0, beta1 <= beta_max (r = 0).
/// With throw_on_mismatch the first mismatch in sweep order is raised as
/// TheoremMismatch. The report does not depend on the number of jobs.
SweepReport brute_force_sweep(long alpha_max, long d_max, long beta_max, SweepOptions options = {});

}  // namespace hurwitz

#endif  // HURWITZ_CLASSIFY_HPP
