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

#include "polyred/pipeline.hpp"

#include <algorithm>
#include <chrono>

#include "polyred/text.hpp"

namespace polyred {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::kSparseSchoolbook: return "sparse";
    case Backend::kDenseNtt: return "ntt";
    case Backend::kAuto: return "auto";
  }
  return "?";
}

}  // namespace

std::string_view mul_method_name(MulMethod m) {
  switch (m) {
    case MulMethod::kSks: return "sks";
    case MulMethod::kIks: return "iks";
    case MulMethod::kCrt: return "crt";
    case MulMethod::kHybrid: return "hybrid";
    case MulMethod::kDirect: return "direct";
  }
  return "?";
}

MulMethod parse_mul_method(std::string_view name) {
  for (MulMethod m :
       {MulMethod::kSks, MulMethod::kIks, MulMethod::kCrt, MulMethod::kHybrid, MulMethod::kDirect}) {
    if (mul_method_name(m) == name) return m;
  }
  raise(ErrorKind::kInvalidArgument, "unknown method '" + std::string(name) + "'");
}

std::vector<std::pair<std::string, std::string>> MulStats::to_record() const {
  auto opt = [](const std::optional<Integer>& v) { return v ? v->str() : std::string(); };
  return {
      {"method", std::string(mul_method_name(method))},
      {"backend", backend ? std::string(backend_name(*backend)) : std::string()},
      {"d_fx", opt(d_fx)},
      {"d_gx", opt(d_gx)},
      {"d_hx", opt(d_hx)},
      {"terms_f", std::to_string(terms_f)},
      {"terms_g", std::to_string(terms_g)},
      {"terms_h", std::to_string(terms_h)},
      {"terms_fx", std::to_string(terms_fx)},
      {"terms_gx", std::to_string(terms_gx)},
      {"terms_hx", std::to_string(terms_hx)},
      {"reduce_mul_count", std::to_string(ops.mul)},
      {"reduce_add_count", std::to_string(ops.add)},
      {"reduce_seconds", std::to_string(reduce_seconds)},
      {"multiply_seconds", std::to_string(multiply_seconds)},
      {"recover_seconds", std::to_string(recover_seconds)},
  };
}

MulResult multiply(const MultiPoly& f, const MultiPoly& g, MulMethod method,
                   const MulOptions& options) {
  MulStats stats;
  stats.method = method;
  stats.terms_f = f.size();
  stats.terms_g = g.size();
  if (method == MulMethod::kDirect) {
    auto start = Clock::now();
    MultiPoly h = mul_direct(f, g);
    stats.multiply_seconds = seconds_since(start);
    stats.terms_h = h.size();
    return {std::move(h), stats};
  }

  static constexpr Method kReduction[] = {Method::kSks, Method::kIks, Method::kCrt,
                                          Method::kHybrid};
  ReduceOptions reduce_options;
  reduce_options.crt_bases = options.crt_bases;

  auto start = Clock::now();
  ReductionOutcome outcome = reduce(f, g, kReduction[static_cast<int>(method)], reduce_options);
  stats.reduce_seconds = seconds_since(start);

  start = Clock::now();
  stats.backend = choose_backend(outcome.f_x, outcome.g_x, options.backend);
  UniPoly hx = multiply(outcome.f_x, outcome.g_x, {*stats.backend, options.backend.dense_threshold});
  stats.multiply_seconds = seconds_since(start);

  start = Clock::now();
  MultiPoly h = recover(hx, outcome.plan, f.ring());
  stats.recover_seconds = seconds_since(start);

  stats.d_fx = outcome.f_x.degree().value();
  stats.d_gx = outcome.g_x.degree().value();
  stats.d_hx = *stats.d_fx + *stats.d_gx;
  stats.terms_fx = outcome.f_x.size();
  stats.terms_gx = outcome.g_x.size();
  stats.terms_hx = hx.size();
  stats.terms_h = h.size();
  stats.ops = outcome.ops;
  return {std::move(h), stats};
}

std::string format_term(const MultiPoly& p, std::size_t term) {
  TermList one(p.ring(), p.nvars());
  one.push(p.exponents(term), p.coeff(term));
  return format_poly(normalize(std::move(one)));
}

std::optional<Divergence> first_divergence(const MultiPoly& expected, const MultiPoly& actual) {
  if (expected.nvars() != actual.nvars() || !(expected.ring() == actual.ring())) {
    return Divergence{0, format_poly(expected), format_poly(actual)};
  }
  const std::size_t n = std::max(expected.size(), actual.size());
  for (std::size_t k = 0; k < n; ++k) {
    bool same = k < expected.size() && k < actual.size() &&
                compare_exponents(expected.exponents(k), actual.exponents(k)) == 0 &&
                expected.coeff(k) == actual.coeff(k);
    if (same) continue;
    Divergence d;
    d.position = k;
    if (k < expected.size()) d.expected = format_term(expected, k);
    if (k < actual.size()) d.actual = format_term(actual, k);
    return d;
  }
  return std::nullopt;
}

VerifyReport verify(const MultiPoly& f, const MultiPoly& g, MulMethod method,
                    const MulOptions& options) {
  VerifyReport report;
  try {
    MultiPoly expected = mul_direct(f, g);
    MultiPoly actual = multiply(f, g, method, options).h;
    report.divergence = first_divergence(expected, actual);
    report.ok = !report.divergence;
  } catch (const std::exception& e) {
    report.message = e.what();
  }
  return report;
}

VerifyReport verify_outcome(const MultiPoly& f, const MultiPoly& g, const ReductionOutcome& outcome,
                            const BackendChoice& backend) {
  VerifyReport report;
  try {
    MultiPoly expected = mul_direct(f, g);
    UniPoly hx = multiply(outcome.f_x, outcome.g_x, backend);
    MultiPoly actual = recover(hx, outcome.plan, f.ring());
    report.divergence = first_divergence(expected, actual);
    report.ok = !report.divergence;
  } catch (const std::exception& e) {
    report.message = e.what();
  }
  return report;
}

}  // namespace polyred
