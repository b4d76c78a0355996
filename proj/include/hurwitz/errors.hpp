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

#ifndef HURWITZ_ERRORS_HPP
#define HURWITZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hurwitz {

// Enumeration guard of the subset-sum convergent formulas was exceeded.
class IndexTooLarge : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A closed-form expression that must be integral was not.
class NonIntegerResult : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The enclosure could not be tightened below the precision cap.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Standalone Bessel values exist only for half-odd orders.
class UnsupportedOrder : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The classification case lists cover d >= 2 only.
class UnsupportedD : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TheoremMismatch : public std::logic_error {
 public:
  TheoremMismatch(const std::string& what, long alpha, long beta0, long beta1, long d)
      : std::logic_error(what), alpha(alpha), beta0(beta0), beta1(beta1), d(d) {}
  long alpha, beta0, beta1, d;
};

}  // namespace hurwitz

#endif  // HURWITZ_ERRORS_HPP
