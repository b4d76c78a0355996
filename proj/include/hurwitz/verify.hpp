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

// Self-check suites behind `hurwitz-cf verify`.

#ifndef HURWITZ_VERIFY_HPP
#define HURWITZ_VERIFY_HPP

#include <string>
#include <vector>

namespace hurwitz {

struct SuiteResult {
  std::string suite;
  long checks = 0;
  std::vector<std::string> failures;  // one human-readable line per failed check

  bool ok() const { return failures.empty(); }
};

/// Names accepted by run_suite, in the order `all` runs them.
const std::vector<std::string>& suite_names();

/// n_max < 0 selects the suite's default bound. Unknown names throw
/// std::invalid_argument. Results are deterministic for any `jobs`.
SuiteResult run_suite(const std::string& name, long n_max, unsigned jobs);

}  // namespace hurwitz

#endif  // HURWITZ_VERIFY_HPP
