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

#include "hurwitz/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <regex>
#include <stdexcept>

#include "hurwitz/cf.hpp"
#include "hurwitz/classify.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/family.hpp"
#include "hurwitz/fibpoly.hpp"
#include "hurwitz/identities.hpp"
#include "hurwitz/limits.hpp"
#include "hurwitz/verify.hpp"

namespace hurwitz {

namespace {

using Json = nlohmann::ordered_json;

// Only plain decimal integers are accepted; CLI11 alone would also take
// hex, binary and floating-point spellings.
const CLI::Validator kDecimal(
    [](std::string& s) -> std::string {
      static const std::regex re("[+-]?[0-9]+");
      return std::regex_match(s, re) ? std::string() : "expected a decimal integer, got '" + s + "'";
    },
    "", "decimal");

struct ParamFlags {
  long alpha = 0, beta0 = 0, beta1 = 0, d = 0, r = 0;
  CFParams params() const { return {alpha, beta0, beta1, d, r}; }
};

void add_param_flags(CLI::App* sub, ParamFlags& f) {
  sub->add_option("--alpha", f.alpha, "constant partial denominator")->required()->check(kDecimal);
  sub->add_option("--b0", f.beta0, "first term of the arithmetic progression")->required()->check(kDecimal);
  sub->add_option("--b1", f.beta1, "step of the arithmetic progression")->required()->check(kDecimal);
  sub->add_option("--d", f.d, "quasi-period length")->required()->check(kDecimal);
  sub->add_option("--r", f.r, "number of leading copies of alpha")->capture_default_str()->check(kDecimal);
}

Json params_json(const CFParams& p) {
  return Json{{"alpha", p.alpha}, {"beta0", p.beta0}, {"beta1", p.beta1}, {"d", p.d}, {"r", p.r}};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// conv

struct ConvFlags {
  ParamFlags p;
  long n = 0;
  std::string method = "recurrence";
  bool json = false;
};

int run_conv(const ConvFlags& f, std::ostream& out) {
  const CFParams p = f.p.params();
  p.validate();
  if (f.n < 0) throw std::invalid_argument("--n must be >= 0");
  const long index = p.index_for(f.n);
  Convergent c;
  if (f.method == "recurrence") {
    if (index >= 0) c = convergents(denom_stream(p), index).back();
  } else if (f.method == "closed") {
    if (!p.guaranteed_regime()) throw std::invalid_argument("closed form requires 0 <= r <= d-1, got " + p.to_string());
    c = closed_form_convergent(p, f.n);
  } else if (f.method == "euler-mindig") {
    if (index >= 0) c = euler_mindig(denom_stream(p), index);
  } else {
    const auto ps = prec_recurrence_p(p, f.n);
    const auto qs = prec_recurrence_q(p, f.n);
    c = {index, ps.back(), qs.back()};
  }
  c.n = index;
  if (f.json) {
    emit(out, Json{{"params", params_json(p)},
                   {"method", f.method},
                   {"n", f.n},
                   {"index", index},
                   {"p", to_string(c.p)},
                   {"q", to_string(c.q)}});
  } else {
    out << "p=" << to_string(c.p) << " q=" << to_string(c.q) << " index=" << index << '\n';
  }
  return kExitOk;
}

// limit

struct LimitFlags {
  ParamFlags p;
  long digits = 30;
  std::string method = "series";
  bool json = false;
};

int run_limit(const LimitFlags& f, std::ostream& out) {
  const CFParams p = f.p.params();
  p.validate();
  if (f.digits < 1) throw std::invalid_argument("--digits must be >= 1");
  PrecReal v;
  if (f.method == "series") {
    v = xi_limit(p, f.digits);
  } else if (f.method == "bessel") {
    v = xi_bessel(p, f.digits);
  } else {
    v = xi_elementary(p, f.digits);
  }
  const DecimalString s = v.to_decimal(f.digits);
  if (f.json) {
    emit(out, Json{{"params", params_json(p)},
                   {"method", f.method},
                   {"digits", f.digits},
                   {"value", s.text},
                   {"certified", s.certified}});
  } else {
    out << s.text << " (" << s.certified_digits << " certified digits)\n";
  }
  return s.certified ? kExitOk : kExitFailure;
}

// classify

struct ClassifyFlags {
  ParamFlags p;
  bool json = false;
};

int run_classify(const ClassifyFlags& f, std::ostream& out) {
  const CFParams p = f.p.params();
  p.validate();
  const SigmaClass cls = sigma_class(p);
  Json half_odd = nullptr, integer = nullptr;
  if (p.d >= 2) {
    half_odd = half_odd_case(p);
    integer = integer_case(p);
  }
  if (f.json) {
    emit(out, Json{{"params", params_json(p)},
                   {"sigma", cls.witness.to_string()},
                   {"class", to_string(cls.tag)},
                   {"half_odd_case", half_odd},
                   {"integer_case", integer}});
  } else {
    out << "sigma=" << cls.witness.to_string() << " class=" << to_string(cls.tag);
    if (p.d >= 2) {
      out << " half_odd_case=" << half_odd.dump() << " integer_case=" << integer.dump();
    } else {
      out << " (case lists apply to d >= 2)";
    }
    out << '\n';
  }
  return kExitOk;
}

// sweep

struct SweepFlags {
  long alpha_max = 60, d_max = 12, beta_max = 20, jobs = 0;
  bool json = false;
};

int run_sweep(const SweepFlags& f, std::ostream& out) {
  if (f.jobs < 0) throw std::invalid_argument("--jobs must be >= 0");
  const SweepReport report =
      brute_force_sweep(f.alpha_max, f.d_max, f.beta_max, {static_cast<unsigned>(f.jobs), false});
  Json mismatches = Json::array();
  for (const SweepMismatch& m : report.mismatches) {
    mismatches.push_back(Json{{"params", params_json(m.params)},
                              {"sigma", m.computed.witness.to_string()},
                              {"class", to_string(m.computed.tag)},
                              {"half_odd_predicted", m.half_odd_predicted},
                              {"integer_predicted", m.integer_predicted}});
  }
  Json half_odd = Json::object(), integer = Json::object();
  for (size_t c = 0; c < report.half_odd_hits.size(); ++c) half_odd[std::to_string(c + 1)] = report.half_odd_hits[c];
  for (size_t c = 0; c < report.integer_hits.size(); ++c) integer[std::to_string(c + 1)] = report.integer_hits[c];
  if (f.json) {
    emit(out, Json{{"mismatches", mismatches},
                   {"cases", Json{{"half_odd", half_odd}, {"integer", integer}}},
                   {"tuples", report.tuples}});
  } else {
    out << "tuples=" << report.tuples << " mismatches=" << report.mismatches.size() << '\n';
    out << "half_odd cases:";
    for (const auto& [k, v] : half_odd.items()) out << ' ' << k << '=' << v.dump();
    out << "\ninteger cases:";
    for (const auto& [k, v] : integer.items()) out << ' ' << k << '=' << v.dump();
    out << '\n';
    for (const auto& m : mismatches) out << "mismatch " << m.dump() << '\n';
  }
  return report.mismatches.empty() ? kExitOk : kExitFailure;
}

// verify

struct VerifyFlags {
  std::string suite = "all";
  long n_max = -1;
  long jobs = 0;
  bool json = false;
};

int run_verify(const VerifyFlags& f, std::ostream& out) {
  if (f.jobs < 0) throw std::invalid_argument("--jobs must be >= 0");
  std::vector<std::string> names;
  if (f.suite == "all") {
    names = suite_names();
  } else {
    names.push_back(f.suite);
  }
  bool ok = true;
  Json suites = Json::array();
  for (const std::string& name : names) {
    const SuiteResult r = run_suite(name, f.n_max, static_cast<unsigned>(f.jobs));
    ok = ok && r.ok();
    suites.push_back(Json{{"suite", r.suite}, {"checks", r.checks}, {"failures", r.failures}});
    if (!f.json) {
      for (const std::string& line : r.failures) out << "FAIL " << name << ": " << line << '\n';
      if (r.ok()) {
        out << name << ": " << r.checks << " checks passed\n";
      } else {
        out << name << ": " << r.failures.size() << " of " << r.checks << " checks failed\n";
      }
    }
  }
  if (f.json) emit(out, Json{{"suites", suites}, {"ok", ok}});
  return ok ? kExitOk : kExitFailure;
}

// poly

struct PolyFlags {
  std::string kind;
  long n_max = 10;
  bool json = false;
};

std::vector<std::string> poly_row(const std::string& kind, long n) {
  std::vector<std::string> row;
  if (kind == "F" || kind == "L") {
    const IntPoly poly = kind == "F" ? fib_poly(n) : lucas_poly(n);
    for (const BigInt& c : poly.coeffs()) row.push_back(to_string(c));
  } else {
    const UniPoly poly = kind == "P" ? p_poly(n) : q_poly(n);
    for (const Rational& c : poly.coeffs()) row.push_back(c.to_string());
  }
  return row;
}

int run_poly(const PolyFlags& f, std::ostream& out) {
  if (f.n_max < 0) throw std::invalid_argument("--n-max must be >= 0");
  Json rows = Json::array();
  for (long n = 0; n <= f.n_max; ++n) {
    const std::vector<std::string> row = poly_row(f.kind, n);
    if (f.json) {
      rows.push_back(Json{{"n", n}, {"coefficients", row}});
    } else {
      out << f.kind << '_' << n << ':';
      if (row.empty()) out << " 0";
      for (const std::string& c : row) out << ' ' << c;
      out << '\n';
    }
  }
  if (f.json) emit(out, Json{{"kind", f.kind}, {"rows", rows}});
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convergents, limits and classification of Hurwitzian continued fractions", "hurwitz-cf"};
  app.require_subcommand(1, 1);

  ConvFlags conv;
  CLI::App* conv_cmd = app.add_subcommand("conv", "convergent with index n*d + r - 1");
  add_param_flags(conv_cmd, conv.p);
  conv_cmd->add_option("--n", conv.n, "block index n")->required()->check(kDecimal);
  conv_cmd->add_option("--method", conv.method)
      ->capture_default_str()
      ->check(CLI::IsMember({"recurrence", "closed", "euler-mindig", "prec-recurrence"}));
  conv_cmd->add_flag("--json", conv.json, "JSON output");

  LimitFlags limit;
  CLI::App* limit_cmd = app.add_subcommand("limit", "value of the continued fraction with certified digits");
  add_param_flags(limit_cmd, limit.p);
  limit_cmd->add_option("--digits", limit.digits, "significant digits")->capture_default_str()->check(kDecimal);
  limit_cmd->add_option("--method", limit.method)
      ->capture_default_str()
      ->check(CLI::IsMember({"series", "bessel", "elementary"}));
  limit_cmd->add_flag("--json", limit.json, "JSON output");

  ClassifyFlags classify;
  CLI::App* classify_cmd = app.add_subcommand("classify", "magic sum and its half-odd / integer case");
  add_param_flags(classify_cmd, classify.p);
  classify_cmd->add_flag("--json", classify.json, "JSON output");

  SweepFlags sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "exhaustive check of the classification case lists");
  sweep_cmd->add_option("--alpha-max", sweep.alpha_max)->capture_default_str()->check(kDecimal);
  sweep_cmd->add_option("--d-max", sweep.d_max)->capture_default_str()->check(kDecimal);
  sweep_cmd->add_option("--beta-max", sweep.beta_max)->capture_default_str()->check(kDecimal);
  sweep_cmd->add_option("--jobs", sweep.jobs, "worker threads, 0 = all cores")->capture_default_str()->check(kDecimal);
  sweep_cmd->add_flag("--json", sweep.json, "JSON output");

  VerifyFlags verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run self-check suites");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify_cmd->add_option("--suite", verify.suite)->capture_default_str()->check(CLI::IsMember(suite_choices));
  verify_cmd->add_option("--n-max", verify.n_max, "size bound, suite default when omitted")->check(kDecimal);
  verify_cmd->add_option("--jobs", verify.jobs, "worker threads, 0 = all cores")->capture_default_str()->check(kDecimal);
  verify_cmd->add_flag("--json", verify.json, "JSON output");

  PolyFlags poly;
  CLI::App* poly_cmd = app.add_subcommand("poly", "coefficient tables, lowest degree first");
  poly_cmd->add_option("--kind", poly.kind)->required()->check(CLI::IsMember({"F", "L", "P", "Q"}));
  poly_cmd->add_option("--n-max", poly.n_max)->capture_default_str()->check(kDecimal);
  poly_cmd->add_flag("--json", poly.json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (conv_cmd->parsed()) return run_conv(conv, out);
    if (limit_cmd->parsed()) return run_limit(limit, out);
    if (classify_cmd->parsed()) return run_classify(classify, out);
    if (sweep_cmd->parsed()) return run_sweep(sweep, out);
    if (verify_cmd->parsed()) return run_verify(verify, out);
    if (poly_cmd->parsed()) return run_poly(poly, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace hurwitz
