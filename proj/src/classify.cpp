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

#include "hurwitz/classify.hpp"

#include <stdexcept>

#include "hurwitz/errors.hpp"
#include "hurwitz/parallel.hpp"

namespace hurwitz {

std::string to_string(SigmaTag tag) {
  switch (tag) {
    case SigmaTag::kHalfOdd:
      return "half-odd";
    case SigmaTag::kInteger:
      return "integer";
    case SigmaTag::kOther:
      return "other";
  }
  return "other";
}

SigmaClass sigma_class(const CFParams& params) {
  const Rational sigma = magic(params).sigma;
  if (sigma.den() == 1) return {SigmaTag::kInteger, sigma};
  if (sigma.den() == 2) return {SigmaTag::kHalfOdd, sigma};
  return {SigmaTag::kOther, sigma};
}

namespace {

void require_d_at_least_two(const CFParams& params) {
  params.validate();
  if (params.d < 2) {
    throw UnsupportedD("classification cases are stated for d >= 2; for d = 1 sigma = beta0/beta1, got " +
                       params.to_string());
  }
}

bool half_odd(long num, long den) { return Rational(num, den).den() == 2; }
bool integral(long num, long den) { return num % den == 0; }

}  // namespace

int half_odd_case(const CFParams& p) {
  require_d_at_least_two(p);
  if (p.d == 3 && p.alpha == 1 && half_odd(p.beta0 + 1, p.beta1)) return 1;
  if (p.d == 2 && p.alpha == 1 && half_odd(p.beta0 + 2, p.beta1)) return 2;
  if (p.d == 2 && p.alpha == 2 && half_odd(p.beta0 + 1, p.beta1)) return 3;
  if (p.d == 2 && p.alpha == 4 && integral(2 * p.beta0 + 1, p.beta1)) return 4;
  return 0;
}

int integer_case(const CFParams& p) {
  require_d_at_least_two(p);
  if (p.d == 3 && p.alpha == 1 && integral(p.beta0 + 1, p.beta1)) return 1;
  if (p.d == 2 && p.alpha == 1 && integral(p.beta0 + 2, p.beta1)) return 2;
  if (p.d == 2 && p.alpha == 2 && integral(p.beta0 + 1, p.beta1)) return 3;
  return 0;
}

SweepReport brute_force_sweep(long alpha_max, long d_max, long beta_max, SweepOptions options) {
  if (alpha_max < 2 || d_max < 2 || beta_max < 2) {
    throw std::invalid_argument("brute_force_sweep: bounds must be >= 2");
  }
  // One slot per alpha; merged in alpha order so the report is independent of scheduling.
  std::vector<SweepReport> parts(static_cast<size_t>(alpha_max));
  parallel_for(parts.size(), options.jobs, [&](size_t i) {
    SweepReport& part = parts[i];
    const long alpha = static_cast<long>(i) + 1;
    for (long d = 2; d <= d_max; ++d) {
      for (long b0 = 1; b0 <= beta_max; ++b0) {
        for (long b1 = 1; b1 <= beta_max; ++b1) {
          const CFParams p{alpha, b0, b1, d, 0};
          const SigmaClass cls = sigma_class(p);
          const int h = half_odd_case(p);
          const int n = integer_case(p);
          ++part.tuples;
          if (h != 0) ++part.half_odd_hits[static_cast<size_t>(h - 1)];
          if (n != 0) ++part.integer_hits[static_cast<size_t>(n - 1)];
          const bool ok = ((cls.tag == SigmaTag::kHalfOdd) == (h != 0)) && ((cls.tag == SigmaTag::kInteger) == (n != 0));
          if (!ok) part.mismatches.push_back({p, cls, h != 0, n != 0});
        }
      }
    }
  });

  SweepReport report;
  report.alpha_max = alpha_max;
  report.d_max = d_max;
  report.beta_max = beta_max;
  for (const SweepReport& part : parts) {
    report.tuples += part.tuples;
    for (size_t c = 0; c < report.half_odd_hits.size(); ++c) report.half_odd_hits[c] += part.half_odd_hits[c];
    for (size_t c = 0; c < report.integer_hits.size(); ++c) report.integer_hits[c] += part.integer_hits[c];
    report.mismatches.insert(report.mismatches.end(), part.mismatches.begin(), part.mismatches.end());
  }
  if (options.throw_on_mismatch && !report.mismatches.empty()) {
    const SweepMismatch& m = report.mismatches.front();
    throw TheoremMismatch("classification mismatch at " + m.params.to_string() + ": sigma = " +
                              m.computed.witness.to_string() + " (" + to_string(m.computed.tag) + ")",
                          m.params.alpha, m.params.beta0, m.params.beta1, m.params.d);
  }
  return report;
}

}  // namespace hurwitz
