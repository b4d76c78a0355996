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

// The family xi(alpha, beta0, beta1, d, r) of continued fractions
//
//   [alpha x r, beta0, (alpha x (d-1), beta0 + beta1*n) for n = 1, 2, ...]
//
// and the exact formulas for its convergents with index n*d + r - 1.

#ifndef HURWITZ_FAMILY_HPP
#define HURWITZ_FAMILY_HPP

#include <string>
#include <vector>

#include "hurwitz/cf.hpp"
#include "hurwitz/exactnum.hpp"
#include "hurwitz/precreal.hpp"

namespace hurwitz {

struct CFParams {
  long alpha = 1;
  long beta0 = 1;
  long beta1 = 1;
  long d = 1;
  long r = 0;

  /// Throws std::invalid_argument unless alpha, beta0, beta1, d >= 1 and r >= 0.
  void validate() const;
  /// 0 <= r <= d-1: the regime in which the closed form is proved.
  bool guaranteed_regime() const { return r >= 0 && r < d; }
  /// Convergent index n*d + r - 1.
  long index_for(long n) const { return n * d + r - 1; }
  std::string to_string() const;

  friend bool operator==(const CFParams&, const CFParams&) = default;
};

/// Magic sum and magic quotient.
struct MagicPair {
  Rational sigma;
  Rational rho;
};

DenomStream denom_stream(const CFParams& params);

MagicPair magic(const CFParams& params);

/// Convergent n*d + r - 1 from the closed-form double sums. Requires the
/// guaranteed regime; throws NonIntegerResult if the sums are not integral.
Convergent closed_form_convergent(const CFParams& params, long n);

/// Same formula with no regime check; F at negative indices follows
/// F_{-m} = (-1)^(m+1) F_m. Untrusted outside the guaranteed regime.
Convergent closed_form_convergent_experimental(const CFParams& params, long n);

/// p_{nd+r-1} for n = 0..n_max by the block recurrence
///   p_{nd+r-1} = F_{nd+r+1} + sum_{k<n} p_{kd+r-1} (beta0 + beta1 k - alpha) F_{(n-k)d}.
std::vector<BigInt> prec_recurrence_p(const CFParams& params, long n_max);

/// q_{nd+r-1} for n = 0..n_max, obtained from prec_recurrence_p on the
/// tail fraction [a_1, a_2, ...], which is again a member of the family.
std::vector<BigInt> prec_recurrence_q(const CFParams& params, long n_max);

/// Exact p_{nd+r-1} / (F_d^n beta1^n (sigma+n-1)_n); n >= 1.
Rational normalized_numerator_exact(const CFParams& params, long n);
Rational normalized_denominator_exact(const CFParams& params, long n);
PrecReal normalized_numerator(const CFParams& params, long n, long digits);
PrecReal normalized_denominator(const CFParams& params, long n, long digits);

}  // namespace hurwitz

#endif  // HURWITZ_FAMILY_HPP
