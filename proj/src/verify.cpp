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

#include "hurwitz/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "hurwitz/cf.hpp"
#include "hurwitz/classify.hpp"
#include "hurwitz/family.hpp"
#include "hurwitz/fibpoly.hpp"
#include "hurwitz/identities.hpp"
#include "hurwitz/limits.hpp"
#include "hurwitz/parallel.hpp"

namespace hurwitz {

namespace {

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}
  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok) r_.failures.push_back(what);
  }

 private:
  SuiteResult& r_;
};

std::string conv_str(const Convergent& c) {
  return "(" + to_string(c.p) + ", " + to_string(c.q) + ")";
}

void fibpoly_suite(long n_max, unsigned, SuiteResult& out) {
  Recorder rec(out);
  for (long n = 0; n <= n_max; ++n) {
    const IntPoly f = fib_poly(n);
    const IntPoly l = lucas_poly(n);
    for (long a = 1; a <= 5; ++a) {
      rec.check(f.eval(a) == fib_eval(n, a), "F_" + std::to_string(n) + "(" + std::to_string(a) + ") polynomial vs scalar");
      rec.check(l.eval(a) == lucas_eval(n, a), "L_" + std::to_string(n) + "(" + std::to_string(a) + ") polynomial vs scalar");
    }
    if (n >= 1) {
      rec.check(l == fib_poly(n + 1) + fib_poly(n - 1), "L_" + std::to_string(n) + " = F_{n+1} + F_{n-1}");
    }
    if (n >= 1 && n <= 20) rec.check(fib_via_even_sets(n) == f, "F_" + std::to_string(n) + " via even subsets");
  }
  for (long d = 1; d <= 5; ++d) {
    for (long r = 0; r <= d; ++r) {
      for (long a = 1; a <= 3; ++a) {
        rec.check(fib_generating_check(d, r, a, 12),
                  "generating function d=" + std::to_string(d) + " r=" + std::to_string(r) + " alpha=" + std::to_string(a));
      }
    }
  }
}

void cf_suite(long n_max, unsigned, SuiteResult& out) {
  Recorder rec(out);
  const std::vector<std::pair<std::string, DenomStream>> streams = {
      {"(1,2,2,3,2)", denom_stream({1, 2, 2, 3, 2})},
      {"(1,1,2,2,1)", denom_stream({1, 1, 2, 2, 1})},
      {"(4,3,1,2,1)", denom_stream({4, 3, 1, 2, 1})},
      {"pi", DenomStream::from_list(std::vector<long>{3, 7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14, 2, 1, 1, 2, 2, 2, 2,
                                                      1, 84, 2, 1, 1})},
  };
  const long top = std::min<long>(n_max, kEulerMindigMaxIndex);
  for (const auto& [name, a] : streams) {
    const auto conv = convergents(a, top);
    for (long n = 0; n <= top; ++n) {
      const Convergent& c = conv[static_cast<size_t>(n + 1)];
      const std::string where = name + " index " + std::to_string(n);
      rec.check(euler_mindig(a, n) == c, where + ": subset formula " + conv_str(euler_mindig(a, n)) + " vs " + conv_str(c));
      if (n <= kEulerMindigNaiveMaxIndex) rec.check(euler_mindig_naive(a, n) == c, where + ": naive subset formula");
      std::vector<BigInt> prefix;
      for (long i = 0; i <= n; ++i) prefix.push_back(a(i));
      rec.check(eval_finite(prefix) == c.value(), where + ": back-substitution");
      if (n >= 1) {
        rec.check(shift_check(a, n), where + ": q_n equals p_{n-1} of the tail");
        rec.check(c.p * conv[static_cast<size_t>(n)].q - c.q * conv[static_cast<size_t>(n)].p == ((n % 2 == 0) ? -1 : 1),
                  where + ": determinant identity");
      }
    }
  }
}

void hurwitz_suite(long n_max, unsigned jobs, SuiteResult& out) {
  std::vector<CFParams> grid;
  for (long a = 1; a <= 4; ++a)
    for (long b0 = 1; b0 <= 4; ++b0)
      for (long b1 = 1; b1 <= 4; ++b1)
        for (long d = 1; d <= 4; ++d)
          for (long r = 0; r < d; ++r) grid.push_back({a, b0, b1, d, r});

  std::vector<SuiteResult> parts(grid.size());
  parallel_for(grid.size(), jobs, [&](size_t i) {
    const CFParams& p = grid[i];
    Recorder rec(parts[i]);
    const DenomStream a = denom_stream(p);
    const long top = p.index_for(n_max);
    const auto conv = convergents(a, std::max(top, 0L));
    const auto pp = prec_recurrence_p(p, n_max);
    const auto qq = prec_recurrence_q(p, n_max);
    rec.check(magic(p).sigma > Rational(0), p.to_string() + ": sigma > 0");
    for (long n = 0; n <= n_max; ++n) {
      const long idx = p.index_for(n);
      const Convergent expect = idx < 0 ? Convergent{} : conv[static_cast<size_t>(idx + 1)];
      const std::string where = p.to_string() + " n=" + std::to_string(n);
      Convergent closed;
      try {
        closed = closed_form_convergent(p, n);
      } catch (const std::exception& e) {
        rec.check(false, where + ": closed form threw " + e.what());
        continue;
      }
      rec.check(closed == expect, where + ": closed form " + conv_str(closed) + " vs recurrence " + conv_str(expect));
      rec.check(pp[static_cast<size_t>(n)] == expect.p && qq[static_cast<size_t>(n)] == expect.q,
                where + ": block recurrence (" + to_string(pp[static_cast<size_t>(n)]) + ", " +
                    to_string(qq[static_cast<size_t>(n)]) + ")");
      if (idx <= 12 && idx >= 0) rec.check(euler_mindig(a, idx) == expect, where + ": subset formula");
    }
  });
  for (const auto& part : parts) {
    out.checks += part.checks;
    out.failures.insert(out.failures.end(), part.failures.begin(), part.failures.end());
  }
}

void identities_suite(long n_max, unsigned jobs, SuiteResult& out) {
  std::vector<SuiteResult> parts(static_cast<size_t>(n_max + 1));
  parallel_for(parts.size(), jobs, [&](size_t i) {
    const long n = static_cast<long>(i);
    Recorder rec(parts[i]);
    const std::string tag = "n=" + std::to_string(n);
    rec.check(verify_rsum(n), tag + ": R summation identity");
    rec.check(verify_ssum(n), tag + ": S summation identity");
    if (n <= 12) {
      rec.check(r_poly(n) == r_poly_binomial_form(n), tag + ": R falling-factorial vs binomial form");
      rec.check(s_poly(n) == s_poly_binomial_form(n), tag + ": S falling-factorial vs binomial form");
    }
    if (n >= 1) {
      for (const Rational& x : {Rational(1, 4), Rational(1, 16), Rational(1), Rational(3, 7)}) {
        rec.check(gcf_convergent_check(n, x), tag + ": P_n/Q_n vs generalized fraction at x=" + x.to_string());
      }
    }
    if (n <= 10) {
      for (long m = 2; m <= 4; ++m) {
        rec.check(pq_convergent_check(m, n), tag + " m=" + std::to_string(m) + ": P/Q convergent connection");
      }
    }
  });
  for (const auto& part : parts) {
    out.checks += part.checks;
    out.failures.insert(out.failures.end(), part.failures.begin(), part.failures.end());
  }
}

void limits_suite(long, unsigned jobs, SuiteResult& out) {
  constexpr long kDigits = 30;
  const std::vector<CFParams> examples = {
      {1, 2, 2, 3, 2}, {1, 5, 4, 3, 2}, {1, 8, 6, 3, 2}, {1, 1, 2, 2, 1}, {1, 3, 4, 2, 1}, {4, 3, 1, 2, 1},
      {2, 1, 2, 2, 0}, {1, 1, 1, 3, 2}, {1, 1, 1, 2, 1}, {2, 1, 1, 2, 1}, {2, 1, 1, 1, 0}, {3, 1, 1, 2, 0},
  };
  std::vector<SuiteResult> parts(examples.size());
  parallel_for(examples.size(), jobs, [&](size_t i) {
    const CFParams& p = examples[i];
    Recorder rec(parts[i]);
    const PrecReal series = xi_limit(p, kDigits);
    const PrecReal bessel = xi_bessel(p, kDigits);
    const DecimalString s = series.to_decimal(kDigits);
    const DecimalString b = bessel.to_decimal(kDigits);
    rec.check(s.certified && b.certified && s.text == b.text,
              p.to_string() + ": series " + s.text + " vs Bessel form " + b.text);
    const Convergent c = convergents(denom_stream(p), 60).back();
    const Rational bound = Rational(BigInt(1), c.q * c.q);
    // 1/q^2 is far below 10^-30, so this comparison needs a finer enclosure.
    const long fine_digits = 2 * static_cast<long>(to_string(c.q).size()) + 10;
    const PrecReal gap = xi_limit(p, fine_digits) + (-c.value());
    rec.check(gap.mag_upper() < bound, p.to_string() + ": limit within 1/q^2 of the 60th convergent");
  });
  for (const auto& part : parts) {
    out.checks += part.checks;
    out.failures.insert(out.failures.end(), part.failures.begin(), part.failures.end());
  }
  Recorder rec(out);
  for (const auto& [b0, b1] : std::vector<std::pair<long, long>>{{1, 1}, {3, 2}, {5, 3}, {7, 4}, {2, 1}}) {
    const std::string perron = perron_d1(b0, b1, 25).to_decimal(25).text;
    const std::string lehmer = lehmer_d1(b0, b1, 25).to_decimal(25).text;
    rec.check(perron == lehmer, "d=1 (" + std::to_string(b0) + "," + std::to_string(b1) + "): " + perron + " vs " + lehmer);
  }
  rec.check(wlang_limit_check(2, 50, 20), "P_50/Q_50 at m=2 to 20 digits");
  rec.check(wlang_limit_check(3, 40, 15), "P_40/Q_40 at m=3 to 15 digits");
}

void classify_suite(long, unsigned jobs, SuiteResult& out) {
  Recorder rec(out);
  const SweepReport report = brute_force_sweep(60, 12, 20, {jobs, false});
  for (const SweepMismatch& m : report.mismatches) {
    rec.check(false, m.params.to_string() + ": sigma = " + m.computed.witness.to_string() + " disagrees with the case list");
  }
  rec.check(report.mismatches.empty(), std::to_string(report.tuples) + " tuples swept");
  for (size_t c = 0; c < report.half_odd_hits.size(); ++c) {
    rec.check(report.half_odd_hits[c] > 0, "half-odd case " + std::to_string(c + 1) + " never hit");
  }
  for (size_t c = 0; c < report.integer_hits.size(); ++c) {
    rec.check(report.integer_hits[c] > 0, "integer case " + std::to_string(c + 1) + " never hit");
  }
  for (long a = 1; a <= 5; ++a)
    for (long d = 1; d <= 5; ++d)
      for (long b0 = 1; b0 <= 4; ++b0)
        for (long b1 = 1; b1 <= 4; ++b1) {
          const Rational base = sigma_class(CFParams{a, b0, b1, d, 0}).witness;
          for (long r = 1; r <= d + 1; ++r) {
            rec.check(sigma_class(CFParams{a, b0, b1, d, r}).witness == base,
                      CFParams{a, b0, b1, d, r}.to_string() + ": sigma depends on r");
          }
        }
}

struct SuiteDef {
  long default_n_max;
  std::function<void(long, unsigned, SuiteResult&)> run;
};

const std::map<std::string, SuiteDef>& suites() {
  static const std::map<std::string, SuiteDef> table = {
      {"fibpoly", {30, fibpoly_suite}}, {"cf", {22, cf_suite}},           {"hurwitz", {15, hurwitz_suite}},
      {"identities", {20, identities_suite}}, {"limits", {0, limits_suite}}, {"classify", {0, classify_suite}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"fibpoly", "cf", "hurwitz", "identities", "limits", "classify"};
  return names;
}

SuiteResult run_suite(const std::string& name, long n_max, unsigned jobs) {
  const auto& table = suites();
  const auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite: " + name);
  SuiteResult out;
  out.suite = name;
  try {
    it->second.run(n_max < 0 ? it->second.default_n_max : n_max, jobs, out);
  } catch (const std::exception& e) {
    ++out.checks;
    out.failures.push_back(name + ": aborted with " + e.what());
  }
  return out;
}

}  // namespace hurwitz
