// Copyright 2026 The polyred Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// polyred: command-line front end.
//
// Exit codes: 0 success, 2 input or usage error, 3 computation error,
// 4 plan/polynomial mismatch during recovery.

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyred/experiments.hpp"
#include "polyred/pipeline.hpp"
#include "polyred/plan_io.hpp"
#include "polyred/reduce.hpp"
#include "polyred/text.hpp"
#include "polyred/unimul.hpp"

namespace {

using namespace polyred;

enum Exit { kOk = 0, kInput = 2, kCompute = 3, kMismatch = 4 };

// Errors raised while reading inputs carry their own exit code.
struct Failure {
  Exit code;
  std::string message;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kInput, path + ": cannot open"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{kInput, path + ": cannot write"};
}

// Largest variable index mentioned, at least 1; the parser reports anything malformed.
std::size_t infer_nvars(const std::string& text) {
  std::size_t best = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    std::size_t j = i + 1, v = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && v < 1'000'000) {
      v = v * 10 + static_cast<std::size_t>(text[j++] - '0');
    }
    best = std::max(best, v);
  }
  return best;
}

Failure input_failure(const std::string& source, const Error& e) {
  std::string where = source;
  if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) {
    where += ": offset " + std::to_string(s->offset());
  }
  return {kInput, where + ": " + e.what()};
}

RingSpec ring_from(const std::optional<std::uint64_t>& modulus) {
  if (!modulus) return RingSpec::integers();
  try {
    return RingSpec::prime_field(*modulus);
  } catch (const Error& e) {
    throw Failure{kInput, std::string("--modulus: ") + e.what()};
  }
}

struct PolyPair {
  MultiPoly f, g;
};

PolyPair load_pair(const std::string& pf, const std::string& pg, std::optional<std::size_t> nvars,
                   const RingSpec& ring) {
  if (pf == "-" && pg == "-") throw Failure{kInput, "only one input may come from stdin"};
  std::string tf = read_source(pf), tg = read_source(pg);
  std::size_t n = nvars ? *nvars : std::max(infer_nvars(tf), infer_nvars(tg));
  auto parse = [&](const std::string& text, const std::string& source) {
    try {
      return parse_poly(text, n, ring);
    } catch (const Error& e) {
      throw input_failure(source, e);
    }
  };
  return {parse(tf, pf), parse(tg, pg)};
}

UniPoly load_unipoly(const std::string& path, const RingSpec& ring) {
  std::string text = read_source(path);
  try {
    return parse_unipoly(text, ring);
  } catch (const Error& e) {
    throw input_failure(path, e);
  }
}

std::vector<Integer> parse_integer_list(const std::string& flag, const std::string& text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw Failure{kInput, flag + ": expected comma-separated non-negative integers"};
    }
    out.emplace_back(item);
  }
  if (out.empty()) throw Failure{kInput, flag + ": empty list"};
  return out;
}

std::vector<Exponent> parse_tuple(const std::string& flag, const std::string& text) {
  std::vector<Exponent> out;
  for (const auto& v : parse_integer_list(flag, text)) {
    auto e = fits_u64(v);
    if (!e) throw Failure{kInput, flag + ": value too large"};
    out.push_back(*e);
  }
  return out;
}

// "a..b" or a comma list.
std::vector<Exponent> parse_bounds(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) return parse_tuple("--L", text);
  auto lo = parse_tuple("--L", text.substr(0, dots));
  auto hi = parse_tuple("--L", text.substr(dots + 2));
  if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0] || hi[0] - lo[0] > 1'000'000) {
    throw Failure{kInput, "--L: expected a range a..b with a <= b"};
  }
  std::vector<Exponent> out;
  for (Exponent L = lo[0]; L <= hi[0]; ++L) out.push_back(L);
  return out;
}

BackendChoice backend_from(const std::string& name) {
  BackendChoice c;
  if (name == "auto") c.kind = Backend::kAuto;
  else if (name == "sparse") c.kind = Backend::kSparseSchoolbook;
  else if (name == "ntt") c.kind = Backend::kDenseNtt;
  else throw Failure{kInput, "--backend: expected auto, sparse or ntt"};
  return c;
}

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::kSparseSchoolbook: return "sparse";
    case Backend::kDenseNtt: return "ntt";
    case Backend::kAuto: break;
  }
  return "auto";
}

std::string stats_json(const MulStats& stats) {
  nlohmann::ordered_json j;
  for (const auto& [k, v] : stats.to_record()) {
    // Numbers stay numbers unless they would lose precision as doubles.
    bool numeric = !v.empty() && v.find_first_not_of("0123456789.") == std::string::npos;
    if (numeric && (v.find('.') != std::string::npos || v.size() <= 15)) {
      j[k] = nlohmann::ordered_json::parse(v);
    } else {
      j[k] = v;
    }
  }
  return j.dump();
}

// Flags shared by the polynomial subcommands.
struct Common {
  std::optional<std::uint64_t> modulus;
  std::optional<std::size_t> nvars;
  std::string method = "iks";
  std::string backend = "auto";
  std::string bases;

  void add_to(CLI::App* cmd, bool with_method) {
    cmd->add_option("--modulus", modulus, "Work over GF(q) for prime q (default: integers)");
    cmd->add_option("--nvars", nvars, "Variable count (default: largest index used)")
        ->check(CLI::PositiveNumber);
    if (with_method) {
      cmd->add_option("--method", method, "sks, iks, crt, hybrid or direct")->capture_default_str();
      cmd->add_option("--bases", bases, "Explicit CRT bases, e.g. 17,31,52");
    }
    cmd->add_option("--backend", backend, "auto, sparse or ntt")->capture_default_str();
  }

  MulOptions options() const {
    MulOptions o;
    o.backend = backend_from(backend);
    if (!bases.empty()) o.crt_bases = parse_integer_list("--bases", bases);
    return o;
  }
};

MulMethod mul_method_from(const std::string& name) {
  try {
    return parse_mul_method(name);
  } catch (const Error&) {
    throw Failure{kInput, "--method: expected sks, iks, crt, hybrid or direct"};
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Sparse multivariate polynomial multiplication through univariate reductions"};
  app.require_subcommand(1);

  Common common;
  std::string in_f, in_g, in_h, plan_path, fx_out, gx_out, plan_out;
  bool with_stats = false;

  auto* multiply_cmd = app.add_subcommand("multiply", "Multiply two polynomials");
  multiply_cmd->add_option("f", in_f, "File holding f ('-' for stdin)")->required();
  multiply_cmd->add_option("g", in_g, "File holding g ('-' for stdin)")->required();
  multiply_cmd->add_flag("--stats", with_stats, "Also print a JSON stats line");
  common.add_to(multiply_cmd, true);

  auto* reduce_cmd = app.add_subcommand("reduce", "Print the univariate images and the plan");
  reduce_cmd->add_option("f", in_f)->required();
  reduce_cmd->add_option("g", in_g)->required();
  reduce_cmd->add_option("--fx-out", fx_out, "Also write f(x) to this file");
  reduce_cmd->add_option("--gx-out", gx_out, "Also write g(x) to this file");
  reduce_cmd->add_option("--plan-out", plan_out, "Also write the plan to this file");
  common.add_to(reduce_cmd, true);

  auto* recover_cmd = app.add_subcommand("recover", "Map a univariate polynomial back through a plan");
  recover_cmd->add_option("hx", in_h, "File holding h(x)")->required();
  recover_cmd->add_option("--plan", plan_path, "File holding the plan line")->required();
  recover_cmd->add_option("--modulus", common.modulus, "Work over GF(q)");

  auto* unimul_cmd = app.add_subcommand("unimul", "Multiply two univariate polynomials");
  unimul_cmd->add_option("a", in_f)->required();
  unimul_cmd->add_option("b", in_g)->required();
  unimul_cmd->add_option("--modulus", common.modulus, "Work over GF(q)");
  unimul_cmd->add_option("--backend", common.backend, "auto, sparse or ntt")->capture_default_str();

  std::string verify_method = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Check reductions against direct multiplication");
  verify_cmd->add_option("f", in_f)->required();
  verify_cmd->add_option("g", in_g)->required();
  common.add_to(verify_cmd, false);
  verify_cmd->add_option("--method", verify_method, "A method name, or all")->capture_default_str();
  verify_cmd->add_option("--bases", common.bases, "Explicit CRT bases");

  auto* bench_cmd = app.add_subcommand("bench", "Degree-ratio experiments");
  bench_cmd->require_subcommand(1);
  std::vector<std::string> tuples;
  std::string bounds = "1..64", format = "csv", out_path;
  std::size_t terms = 10'000, trials = 20;
  std::uint64_t seed = 1;
  auto add_bench = [&](CLI::App* cmd) {
    cmd->add_option("--tuple", tuples, "Degree tuple, e.g. 10,40,70,100");
    cmd->add_option("--terms", terms, "Monomials drawn per polynomial")->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--trials", trials, "Trials per configuration")->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "Base seed")->capture_default_str();
    cmd->add_option("--format", format, "csv or json")->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out_path, "Write the report here instead of stdout");
    cmd->add_option("--modulus", common.modulus, "Coefficients in GF(q)");
  };
  auto* table3_cmd = bench_cmd->add_subcommand("table3", "Fully random case");
  add_bench(table3_cmd);
  auto* sweep_cmd = bench_cmd->add_subcommand("sweep", "Partially random case over a range of L");
  add_bench(sweep_cmd);
  sweep_cmd->add_option("--L", bounds, "Range a..b or list of L values")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  Exit compute_code = kCompute;
  try {
    RingSpec ring = ring_from(common.modulus);

    if (*multiply_cmd) {
      MulMethod method = mul_method_from(common.method);
      MulOptions opts = common.options();
      auto [f, g] = load_pair(in_f, in_g, common.nvars, ring);
      MulResult r = multiply(f, g, method, opts);
      std::cout << format_poly(r.h) << "\n";
      if (with_stats) std::cout << stats_json(r.stats) << "\n";
      return kOk;
    }

    if (*reduce_cmd) {
      MulMethod mm = mul_method_from(common.method);
      if (mm == MulMethod::kDirect) throw Failure{kInput, "--method: direct has no reduction"};
      Method method = parse_method(common.method);
      ReduceOptions opts;
      if (!common.bases.empty()) opts.crt_bases = parse_integer_list("--bases", common.bases);
      auto [f, g] = load_pair(in_f, in_g, common.nvars, ring);
      ReductionOutcome r = reduce(f, g, method, opts);
      std::string fx = format_unipoly(r.f_x), gx = format_unipoly(r.g_x);
      std::string plan = serialize_plan(r.plan);
      std::cout << fx << "\n" << gx << "\n" << plan << "\n";
      if (!fx_out.empty()) write_file(fx_out, fx + "\n");
      if (!gx_out.empty()) write_file(gx_out, gx + "\n");
      if (!plan_out.empty()) write_file(plan_out, plan + "\n");
      return kOk;
    }

    if (*recover_cmd) {
      std::string plan_text = read_source(plan_path);
      Plan plan;
      try {
        plan = parse_plan(plan_text);
      } catch (const Error& e) {
        throw input_failure(plan_path, e);
      }
      UniPoly h = load_unipoly(in_h, ring);
      compute_code = kMismatch;
      std::cout << format_poly(recover(h, plan, ring)) << "\n";
      return kOk;
    }

    if (*unimul_cmd) {
      BackendChoice choice = backend_from(common.backend);
      if (in_f == "-" && in_g == "-") throw Failure{kInput, "only one input may come from stdin"};
      UniPoly a = load_unipoly(in_f, ring), b = load_unipoly(in_g, ring);
      std::cerr << "backend: " << backend_name(choose_backend(a, b, choice)) << "\n";
      std::cout << format_unipoly(multiply(a, b, choice)) << "\n";
      return kOk;
    }

    if (*verify_cmd) {
      std::vector<MulMethod> methods;
      if (verify_method == "all") {
        methods = {MulMethod::kSks, MulMethod::kIks, MulMethod::kCrt, MulMethod::kHybrid};
      } else {
        methods = {mul_method_from(verify_method)};
      }
      MulOptions opts = common.options();
      auto [f, g] = load_pair(in_f, in_g, common.nvars, ring);
      bool all_ok = true;
      for (MulMethod m : methods) {
        VerifyReport rep = verify(f, g, m, opts);
        all_ok = all_ok && rep.ok;
        std::cout << mul_method_name(m) << ": " << (rep.ok ? "ok" : "FAILED");
        if (!rep.message.empty()) std::cout << " (" << rep.message << ")";
        if (rep.divergence) {
          const auto& d = *rep.divergence;
          std::cout << " first difference at term " << d.position << ": expected "
                    << d.expected.value_or("nothing") << ", got " << d.actual.value_or("nothing");
        }
        std::cout << "\n";
      }
      return all_ok ? kOk : kCompute;
    }

    // bench
    compute_code = kInput;  // generator errors here stem from the flags
    std::vector<std::vector<Exponent>> parsed;
    for (const auto& t : tuples) parsed.push_back(parse_tuple("--tuple", t));
    std::vector<RatioReport> reports;
    if (*table3_cmd) {
      if (parsed.empty()) {
        parsed = {{100, 100, 100, 100}, {70, 80, 90, 100}, {40, 60, 80, 100}, {10, 40, 70, 100}};
      }
      for (const auto& t : parsed) {
        if (t.size() != parsed.front().size()) {
          throw Failure{kInput, "--tuple: all tuples need the same length"};
        }
      }
      reports = run_table3(parsed, terms, trials, seed, ring);
    } else {
      if (parsed.empty()) parsed = {{100, 100, 100, 100}};
      if (parsed.size() != 1) throw Failure{kInput, "--tuple: sweep takes a single tuple"};
      auto Ls = parse_bounds(bounds);
      reports = run_fig1_sweep(parsed.front(), Ls, terms, trials, seed, ring);
    }
    std::string text = format == "csv" ? to_csv(reports) : to_json(reports) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_file(out_path, text);
    }
    return kOk;
  } catch (const Failure& f) {
    std::cerr << "polyred: " << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    Exit code = compute_code;
    if (code == kMismatch && e.kind() != ErrorKind::kNegativeExponent &&
        e.kind() != ErrorKind::kExponentOutOfRange && e.kind() != ErrorKind::kArityMismatch) {
      code = kCompute;
    }
    std::cerr << "polyred: " << e.what() << "\n";
    return code;
  } catch (const std::exception& e) {
    std::cerr << "polyred: " << e.what() << "\n";
    return kCompute;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
