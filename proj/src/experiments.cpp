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

#include "polyred/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include <json.hpp>

#include "polyred/reduce.hpp"

namespace polyred {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_config(const GenConfig& cfg) {
  if (cfg.nvars == 0 || cfg.degrees.size() != cfg.nvars) {
    raise(ErrorKind::kInvalidArgument, "degree tuple length must equal the variable count");
  }
  if (cfg.terms == 0) raise(ErrorKind::kInvalidArgument, "at least one term is required");
  for (Exponent d : cfg.degrees) {
    if (d < 1) raise(ErrorKind::kInvalidArgument, "degrees must be at least 1");
  }
}

class Sampler {
 public:
  Sampler(std::uint64_t seed, const RingSpec& ring) : rng_(seed), ring_(ring) {}

  Exponent uniform(Exponent lo, Exponent hi) {
    return std::uniform_int_distribution<Exponent>(lo, hi)(rng_);
  }

  // Positive over the integers so that merging never cancels a forced maximum.
  Integer coeff() {
    if (ring_.is_field()) {
      return Integer(std::uniform_int_distribution<std::uint64_t>(1, ring_.modulus() - 1)(rng_));
    }
    return Integer(std::uniform_int_distribution<std::uint64_t>(1, 1000)(rng_));
  }

 private:
  std::mt19937_64 rng_;
  RingSpec ring_;
};

MultiPoly generate(const GenConfig& cfg, bool partial) {
  check_config(cfg);
  const std::size_t n = cfg.nvars;
  const auto& d = cfg.degrees;
  Exponent L = 0;
  if (partial) {
    if (!cfg.diff_bound) raise(ErrorKind::kInvalidArgument, "partially random needs L");
    if (n < 2) raise(ErrorKind::kInvalidArgument, "partially random needs two variables");
    L = *cfg.diff_bound;
    if (L < 1) raise(ErrorKind::kInvalidArgument, "L must be at least 1");
    if (d[0] > d[1] + L || d[1] > d[0] + L) {
      raise(ErrorKind::kInfeasibleConstraint,
            "degrees " + std::to_string(d[0]) + " and " + std::to_string(d[1]) +
                " cannot both be attained with L = " + std::to_string(L));
    }
  } else if (cfg.diff_bound) {
    raise(ErrorKind::kInvalidArgument, "fully random generation takes no L");
  }

  Sampler s(cfg.seed, cfg.ring);
  TermList terms(cfg.ring, n);
  terms.exponents.reserve((cfg.terms + n) * n);
  terms.coeffs.reserve(cfg.terms + n);
  std::vector<Exponent> k(n);

  auto draw = [&] {
    for (std::size_t v = 0; v < n; ++v) k[v] = s.uniform(0, d[v]);
    if (partial) {
      Exponent k2 = k[1];
      Exponent lo = k2 > L ? k2 - L : 0;
      Exponent hi = std::min(d[0], k2 + L);
      k[0] = s.uniform(lo, hi);
    }
  };

  for (std::size_t t = 0; t < cfg.terms; ++t) {
    draw();
    terms.push(k, s.coeff());
  }
  for (std::size_t v = 0; v < n; ++v) {
    draw();
    k[v] = d[v];
    if (partial && v == 0) k[1] = d[0] > L ? d[0] - L : 0;
    if (partial && v == 1) k[0] = d[1] > L ? d[1] - L : 0;
    terms.push(k, s.coeff());
  }
  return normalize(std::move(terms));
}

Rational sks_denominator(std::span<const Integer> d_h) {
  Integer base = *std::max_element(d_h.begin(), d_h.end()) + 1;
  return Rational(d_h.back() * boost::multiprecision::pow(base, static_cast<unsigned>(d_h.size() - 1)));
}

double ratio(const Integer& num, const Integer& den) {
  return static_cast<double>(Rational(num, den));
}

std::vector<Integer> doubled(const std::vector<Exponent>& degrees) {
  std::vector<Integer> out;
  for (Exponent d : degrees) out.push_back(2 * Integer(d));
  return out;
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

MultiPoly gen_fully_random(const GenConfig& cfg) { return generate(cfg, false); }

MultiPoly gen_partially_random(const GenConfig& cfg) { return generate(cfg, true); }

Rational predict_ratio_iks(std::span<const Integer> d_h) {
  if (d_h.empty()) raise(ErrorKind::kInvalidArgument, "empty degree tuple");
  Integer num = 1;
  for (const auto& d : d_h) {
    if (d < 1) raise(ErrorKind::kInvalidArgument, "degrees must be at least 1");
    num *= d + 1;
  }
  return Rational(num) / sks_denominator(d_h);
}

Rational predict_ratio_hybrid_crt(std::span<const Integer> d_h, const Integer& L) {
  if (d_h.size() < 3) raise(ErrorKind::kInvalidArgument, "needs at least three variables");
  Integer num = 4 * L * (d_h[1] + 2 * L + 2) + 1;
  for (std::size_t v = 2; v < d_h.size(); ++v) num *= d_h[v] + 1;
  return Rational(num) / sks_denominator(d_h);
}

bool predict_crt_branch(std::span<const Integer> d_h, const Integer& L) {
  if (d_h.size() < 2) return false;
  Integer base = std::max<Integer>(d_h[0] + 1, d_h[1] + 2 + 2 * L);
  return 4 * L * base < d_h[0] * d_h[1];
}

bool RatioReport::crt_in_every_trial() const {
  return !trials.empty() && std::all_of(trials.begin(), trials.end(), [](const TrialRecord& t) {
    return t.hr_first_round_crt;
  });
}

bool RatioReport::ratios_identical_per_trial() const {
  return std::all_of(trials.begin(), trials.end(),
                     [](const TrialRecord& t) { return t.d_iks == t.d_hr; });
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(0x5bd1e995ULL + index));
}

RatioReport run_trials(const ExperimentConfig& cfg) {
  if (cfg.trials == 0) raise(ErrorKind::kInvalidArgument, "at least one trial is required");
  RatioReport report;
  report.degrees = cfg.degrees;
  report.diff_bound = cfg.diff_bound;
  report.terms = cfg.terms;
  report.seed = cfg.seed;

  const auto d_h = doubled(cfg.degrees);
  report.pred_iks = static_cast<double>(predict_ratio_iks(d_h));
  report.pred_hr = report.pred_iks;
  if (cfg.diff_bound && d_h.size() >= 3 && predict_crt_branch(d_h, Integer(*cfg.diff_bound))) {
    report.pred_hr = static_cast<double>(predict_ratio_hybrid_crt(d_h, Integer(*cfg.diff_bound)));
  }

  for (std::size_t t = 0; t < cfg.trials; ++t) {
    TrialRecord rec;
    rec.trial = t;
    rec.seed = trial_seed(cfg.seed, t);
    GenConfig gen{cfg.degrees.size(), cfg.terms, cfg.degrees, cfg.diff_bound, 0, cfg.ring};
    gen.seed = splitmix64(rec.seed ^ 0xf);
    MultiPoly f = cfg.diff_bound ? gen_partially_random(gen) : gen_fully_random(gen);
    gen.seed = splitmix64(rec.seed ^ 0x9);
    MultiPoly g = cfg.diff_bound ? gen_partially_random(gen) : gen_fully_random(gen);

    rec.d_sks = sks_reduce(f, g).product_degree();
    rec.d_iks = iks_reduce(f, g).product_degree();
    ReductionOutcome hr = hybrid_reduce(f, g);
    rec.d_hr = hr.product_degree();
    const auto& steps = std::get<HybridPlan>(hr.plan).steps;
    rec.hr_first_round_crt = !steps.empty() && steps.front().branch == HybridBranch::kCrt;
    if (cfg.include_crt) rec.d_crt = crt_reduce(f, g).product_degree();
    rec.ratio_iks = ratio(rec.d_iks, rec.d_sks);
    rec.ratio_hr = ratio(rec.d_hr, rec.d_sks);
    report.mean_ratio_iks += rec.ratio_iks;
    report.mean_ratio_hr += rec.ratio_hr;
    report.trials.push_back(std::move(rec));
  }
  report.mean_ratio_iks /= static_cast<double>(cfg.trials);
  report.mean_ratio_hr /= static_cast<double>(cfg.trials);
  return report;
}

std::vector<RatioReport> run_table3(const std::vector<std::vector<Exponent>>& tuples,
                                    std::size_t terms, std::size_t trials, std::uint64_t seed,
                                    const RingSpec& ring) {
  std::vector<RatioReport> out;
  for (const auto& tuple : tuples) {
    ExperimentConfig cfg;
    cfg.degrees = tuple;
    cfg.terms = terms;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.ring = ring;
    out.push_back(run_trials(cfg));
  }
  return out;
}

std::vector<RatioReport> run_fig1_sweep(const std::vector<Exponent>& tuple,
                                        std::span<const Exponent> bounds, std::size_t terms,
                                        std::size_t trials, std::uint64_t seed,
                                        const RingSpec& ring) {
  std::vector<RatioReport> out;
  for (Exponent L : bounds) {
    ExperimentConfig cfg;
    cfg.degrees = tuple;
    cfg.diff_bound = L;
    cfg.terms = terms;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.ring = ring;
    out.push_back(run_trials(cfg));
  }
  return out;
}

std::string to_csv(std::span<const RatioReport> reports) {
  std::string out;
  if (reports.empty()) return out;
  const std::size_t n = reports.front().degrees.size();
  out += "n";
  for (std::size_t v = 1; v <= n; ++v) out += ",d" + std::to_string(v);
  out += ",L,T,trial,seed,d_sks,d_iks,d_hr,ratio_iks,ratio_hr,pred_iks,pred_hr\n";
  for (const auto& r : reports) {
    if (r.degrees.size() != n) {
      raise(ErrorKind::kInvalidArgument, "reports with different variable counts");
    }
    for (const auto& t : r.trials) {
      out += std::to_string(n);
      for (Exponent d : r.degrees) out += "," + std::to_string(d);
      out += "," + (r.diff_bound ? std::to_string(*r.diff_bound) : std::string());
      out += "," + std::to_string(r.terms) + "," + std::to_string(t.trial) + "," +
             std::to_string(t.seed);
      out += "," + t.d_sks.str() + "," + t.d_iks.str() + "," + t.d_hr.str();
      out += "," + fixed(t.ratio_iks) + "," + fixed(t.ratio_hr) + "," + fixed(r.pred_iks) + "," +
             fixed(r.pred_hr) + "\n";
    }
  }
  return out;
}

std::string to_json(std::span<const RatioReport> reports) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    for (const auto& t : r.trials) {
      nlohmann::ordered_json row;
      row["n"] = r.degrees.size();
      for (std::size_t v = 0; v < r.degrees.size(); ++v) {
        row["d" + std::to_string(v + 1)] = r.degrees[v];
      }
      row["L"] = r.diff_bound ? nlohmann::ordered_json(*r.diff_bound) : nlohmann::ordered_json();
      row["T"] = r.terms;
      row["trial"] = t.trial;
      row["seed"] = t.seed;
      // Degrees can exceed 64 bits in principle; keep them as decimal strings.
      row["d_sks"] = t.d_sks.str();
      row["d_iks"] = t.d_iks.str();
      row["d_hr"] = t.d_hr.str();
      row["ratio_iks"] = t.ratio_iks;
      row["ratio_hr"] = t.ratio_hr;
      row["pred_iks"] = r.pred_iks;
      row["pred_hr"] = r.pred_hr;
      rows.push_back(std::move(row));
    }
  }
  return rows.dump(2);
}

}  // namespace polyred
