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

// Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any
// criterion fails.

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/cf.hpp"
#include "hurwitz/classify.hpp"
#include "hurwitz/cli.hpp"
#include "hurwitz/family.hpp"
#include "hurwitz/identities.hpp"
#include "hurwitz/limits.hpp"
#include "oracles.hpp"

using hurwitz::CFParams;
using oracle::Interval;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;  // <= 0: no runtime bound
  std::function<Outcome()> run;
};

mpq_class pow10(int e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(e)));
  return e < 0 ? mpq_class(1, p) : mpq_class(p);
}

// "1.234", "-0.5", "1.2e-21" to an exact rational.
mpq_class parse_decimal(const std::string& s) {
  std::string mant = s;
  int exp10 = 0;
  if (const auto e = s.find('e'); e != std::string::npos) {
    mant = s.substr(0, e);
    exp10 = std::stoi(s.substr(e + 1));
  }
  bool neg = false;
  if (!mant.empty() && mant[0] == '-') {
    neg = true;
    mant.erase(0, 1);
  }
  std::string digits;
  int frac = 0;
  bool after = false;
  for (char c : mant) {
    if (c == '.') {
      after = true;
      continue;
    }
    digits += c;
    if (after) ++frac;
  }
  mpq_class v = mpz_class(digits) * pow10(exp10 - frac);
  return neg ? mpq_class(-v) : v;
}

// Value printed by `hurwitz-cf limit --json`.
mpq_class cli_limit(const CFParams& p, long digits, bool* certified) {
  std::ostringstream out, err;
  const std::vector<std::string> args = {"limit", "--alpha", std::to_string(p.alpha), "--b0", std::to_string(p.beta0),
                                         "--b1", std::to_string(p.beta1), "--d", std::to_string(p.d), "--r",
                                         std::to_string(p.r), "--digits", std::to_string(digits), "--json"};
  if (hurwitz::run_cli(args, out, err) != 0) throw std::runtime_error("limit failed: " + err.str());
  const auto j = nlohmann::json::parse(out.str());
  if (certified) *certified = j["certified"].get<bool>();
  return parse_decimal(j["value"].get<std::string>());
}

mpq_class dist(const mpq_class& x, const Interval& y) {
  const mpq_class a = abs(x - y.lo), b = abs(x - y.hi);
  return a > b ? a : b;
}

std::string sci(const mpq_class& x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x.get_d());
  return buf;
}

Outcome e_minus_one() {
  const CFParams p{1, 2, 2, 3, 2};
  bool cert = false;
  const mpq_class v = cli_limit(p, 30, &cert);
  const Interval e1 = oracle::exp_series(1, 90) - Interval::point(1);
  const mpq_class err = dist(v, e1);
  const auto a = oracle::family_denoms(1, 2, 2, 3, 2, 61);
  const mpq_class c = oracle::fold_cf(a);
  const mpq_class gap = dist(c, e1);
  const mpq_class bound = mpq_class(1, c.get_den() * c.get_den());
  return {cert && err < pow10(-28) && gap < bound,
          "|limit - (e-1)| = " + sci(err) + ", 60th convergent gap " + sci(gap) + " < 1/q^2 = " + sci(bound)};
}

Outcome tan_one() {
  bool cert = false;
  const mpq_class v = cli_limit({1, 1, 2, 2, 1}, 30, &cert);
  const Interval t = oracle::sin_series(1, 40) / oracle::cos_series(1, 40);
  const mpq_class err = dist(v, t);
  return {cert && err < pow10(-28), "|limit - tan 1| = " + sci(err)};
}

Outcome ugly_example() {
  bool cert = false;
  const mpq_class v = cli_limit({4, 3, 1, 2, 1}, 20, &cert);
  const mpq_class h(1, 2);
  const Interval s = oracle::sin_series(h, 30), c = oracle::cos_series(h, 30);
  const Interval num = scale(scale(s, 11) - scale(c, 6), 4);
  const Interval den = scale(c, 53) - scale(s, 97);
  const mpq_class err = dist(v, num / den);
  const Interval sandwich = oracle::cf_bracket(oracle::family_denoms(4, 3, 1, 2, 1, 12));
  const bool inside = sandwich.lo <= v && v <= sandwich.hi;
  return {cert && err < pow10(-18) && inside,
          "|limit - closed form| = " + sci(err) + (inside ? ", inside" : ", outside") + " the 12-term sandwich"};
}

Outcome three_way() {
  long checked = 0, em = 0;
  for (long a = 1; a <= 4; ++a)
    for (long b0 = 1; b0 <= 4; ++b0)
      for (long b1 = 1; b1 <= 4; ++b1)
        for (long d = 1; d <= 4; ++d)
          for (long r = 0; r < d; ++r) {
            const CFParams p{a, b0, b1, d, r};
            const long n_max = 15;
            const hurwitz::DenomStream s = hurwitz::denom_stream(p);
            const auto conv = hurwitz::convergents(s, std::max(p.index_for(n_max), 18L));
            const auto ps = hurwitz::prec_recurrence_p(p, n_max);
            const auto qs = hurwitz::prec_recurrence_q(p, n_max);
            for (long n = 0; n <= n_max; ++n) {
              const long idx = p.index_for(n);
              const hurwitz::Convergent& want = conv[static_cast<size_t>(idx + 1)];
              const hurwitz::Convergent got = hurwitz::closed_form_convergent(p, n);
              if (!(got == want) || ps[static_cast<size_t>(n)] != want.p || qs[static_cast<size_t>(n)] != want.q)
                return {false, "disagreement at " + p.to_string() + " n=" + std::to_string(n)};
              ++checked;
            }
            for (long idx = 0; idx <= 18; ++idx) {
              if (!(hurwitz::euler_mindig(s, idx) == conv[static_cast<size_t>(idx + 1)]))
                return {false, "subset formula disagrees at " + p.to_string() + " index " + std::to_string(idx)};
              ++em;
            }
          }
  return {true, std::to_string(checked) + " convergents, " + std::to_string(em) + " subset-formula indices"};
}

Outcome identity_suites() {
  for (long n = 0; n <= 20; ++n)
    if (!hurwitz::verify_rsum(n) || !hurwitz::verify_ssum(n)) return {false, "sum identity fails at n=" + std::to_string(n)};
  for (long m = 2; m <= 4; ++m)
    for (long n = 0; n <= 10; ++n)
      if (!hurwitz::pq_convergent_check(m, n))
        return {false, "P/Q convergent formula fails at m=" + std::to_string(m) + " n=" + std::to_string(n)};
  return {true, "sums n<=20, P/Q m in 2..4 n<=10"};
}

Outcome sweep() {
  const auto rep = hurwitz::brute_force_sweep(60, 12, 20, {0, false});
  std::string hits;
  bool all = true;
  for (long h : rep.half_odd_hits) {
    hits += " " + std::to_string(h);
    all = all && h > 0;
  }
  hits += " |";
  for (long h : rep.integer_hits) {
    hits += " " + std::to_string(h);
    all = all && h > 0;
  }
  return {rep.mismatches.empty() && all, std::to_string(rep.tuples) + " tuples, " +
                                             std::to_string(rep.mismatches.size()) + " mismatches, hits" + hits};
}

Outcome cross_formula() {
  for (auto [b0, b1] : {std::pair{1L, 1L}, {3L, 2L}, {5L, 3L}, {7L, 4L}}) {
    const auto l = hurwitz::lehmer_d1(b0, b1, 25).to_decimal(25);
    const auto p = hurwitz::perron_d1(b0, b1, 25).to_decimal(25);
    if (!l.certified || !p.certified || l.text != p.text)
      return {false, "d=1 formulas differ at beta=(" + std::to_string(b0) + "," + std::to_string(b1) + ")"};
  }
  const std::vector<CFParams> examples = {
      {1, 2, 2, 3, 2}, {1, 5, 4, 3, 2}, {1, 8, 6, 3, 2}, {1, 1, 2, 2, 1}, {1, 3, 4, 2, 1}, {4, 3, 1, 2, 1},
      {2, 1, 2, 2, 0}, {1, 1, 1, 3, 2}, {1, 1, 1, 2, 1}, {2, 1, 1, 2, 1}, {2, 1, 1, 1, 0}, {3, 1, 1, 2, 0},
  };
  for (const CFParams& p : examples) {
    const auto a = hurwitz::xi_limit(p, 30).to_decimal(30);
    const auto b = hurwitz::xi_bessel(p, 30).to_decimal(30);
    if (!a.certified || !b.certified || a.text != b.text) return {false, "Bessel form differs at " + p.to_string()};
  }
  return {true, "4 d=1 pairs at 25 digits, " + std::to_string(examples.size()) + " examples at 30 digits"};
}

Outcome wlang() {
  const bool a = hurwitz::wlang_limit_check(2, 50, 20);
  const bool b = hurwitz::wlang_limit_check(3, 40, 15);
  return {a && b, std::string("m=2: ") + (a ? "true" : "false") + ", m=3: " + (b ? "true" : "false")};
}

Outcome asymptotics() {
  bool pass = true;
  std::string detail;
  for (const CFParams& p : {CFParams{1, 1, 2, 2, 1}, CFParams{1, 2, 2, 3, 2}}) {
    const hurwitz::PrecReal lim = hurwitz::numerator_limit(p, 30);
    const double d200 = std::fabs((hurwitz::normalized_numerator(p, 200, 30) - lim).approx());
    const double d50 = std::fabs((hurwitz::normalized_numerator(p, 50, 30) - lim).approx());
    const bool ok = d200 < 1e-3 && d200 < d50;
    pass = pass && ok;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s%s: dev(200)=%.4e dev(50)=%.4e%s", detail.empty() ? "" : "; ",
                  p.to_string().c_str(), d200, d50, ok ? "" : " [over 1e-3]");
    detail += buf;
  }
  return {pass, detail};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "e-1 reproduction", 1.0, e_minus_one},
      {2, "tan(1) reproduction", 1.0, tan_one},
      {3, "closed-form example (4,3,1,2,1)", 0, ugly_example},
      {4, "three-way convergent agreement", 60.0, three_way},
      {5, "identity suites", 30.0, identity_suites},
      {6, "classification sweep", 60.0, sweep},
      {7, "cross-formula consistency", 0, cross_formula},
      {8, "P/Q limit check", 0, wlang},
      {9, "normalized numerator asymptotics", 0, asymptotics},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      o.pass = false;
      o.detail += " [over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget]";
    }
    failed += !o.pass;
    std::printf("%s [%d] %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
