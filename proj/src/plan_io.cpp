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

#include "polyred/plan_io.hpp"

#include <cctype>
#include <sstream>
#include <type_traits>
#include <vector>

namespace polyred {
namespace {

[[noreturn]] void bad(const std::string& what) { raise(ErrorKind::kPlanFormat, what); }

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Integer parse_int(std::string_view s) {
  std::size_t k = 0;
  if (!s.empty() && s[0] == '-') k = 1;
  if (k == s.size()) bad("expected an integer, found '" + std::string(s) + "'");
  for (std::size_t i = k; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      bad("expected an integer, found '" + std::string(s) + "'");
    }
  }
  return Integer(std::string(s));
}

std::size_t parse_index(std::string_view s) {
  Integer v = parse_int(s);
  if (v < 1 || v > 1'000'000) bad("variable index '" + std::string(s) + "' out of range");
  return static_cast<std::size_t>(v);
}

std::vector<Integer> parse_list(std::string_view s) {
  std::vector<Integer> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_int(item));
  return out;
}

std::string join(const std::vector<Integer>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].str();
  }
  return out;
}

// Splits "key=value" tokens and checks the keys appear in the given order.
std::vector<std::string> fields(const std::vector<std::string>& tokens,
                                std::initializer_list<std::string_view> keys) {
  if (tokens.size() != keys.size() + 1) bad("wrong number of fields");
  std::vector<std::string> values;
  std::size_t k = 1;
  for (auto key : keys) {
    const auto& tok = tokens[k++];
    auto eq = tok.find('=');
    if (eq == std::string::npos || std::string_view(tok).substr(0, eq) != key) {
      bad("expected field '" + std::string(key) + "', found '" + tok + "'");
    }
    values.push_back(tok.substr(eq + 1));
  }
  return values;
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kSks: return "sks";
    case Method::kIks: return "iks";
    case Method::kCrt: return "crt";
    case Method::kHybrid: return "hybrid";
    case Method::kSequence: return "sequence";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::kSks, Method::kIks, Method::kCrt, Method::kHybrid, Method::kSequence}) {
    if (method_name(m) == name) return m;
  }
  raise(ErrorKind::kInvalidArgument, "unknown method '" + std::string(name) + "'");
}

std::string serialize_plan(const Plan& plan) {
  std::ostringstream out;
  out << method_name(plan_method(plan)) << " n=" << plan_nvars(plan);
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SksPlan>) {
          out << " base=" << p.base;
        } else if constexpr (std::is_same_v<T, IksPlan>) {
          out << " exponents=" << join(p.exponents);
        } else if constexpr (std::is_same_v<T, CrtPlan>) {
          out << " bases=" << join(p.bases) << " product=" << p.product
              << " cofactors=" << join(p.cofactors) << " inverses=" << join(p.inverses);
        } else if constexpr (std::is_same_v<T, HybridPlan>) {
          out << " steps=";
          for (std::size_t k = 0; k < p.steps.size(); ++k) {
            const auto& s = p.steps[k];
            if (k) out << ';';
            out << s.round << ':' << s.var_i << ':' << s.var_j << ':';
            if (s.branch == HybridBranch::kCrt) {
              out << "crt:" << s.base << ':' << s.offset_f << ':' << s.offset_g;
            } else {
              out << "iks:" << s.base;
            }
          }
        } else {
          out << " steps=";
          for (std::size_t k = 0; k < p.steps.size(); ++k) {
            const auto& s = p.steps[k];
            if (k) out << ';';
            out << s.sub.from << '>' << s.sub.to << ':' << s.exponent;
          }
        }
      },
      plan);
  return out.str();
}

Plan parse_plan(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  std::vector<std::string> tokens;
  {
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
  }
  if (tokens.empty()) bad("empty plan record");
  Method method;
  try {
    method = parse_method(tokens[0]);
  } catch (const Error&) {
    bad("unknown method tag '" + tokens[0] + "'");
  }
  auto n_of = [&](const std::string& v) { return parse_index(v); };

  switch (method) {
    case Method::kSks: {
      auto v = fields(tokens, {"n", "base"});
      SksPlan p{n_of(v[0]), parse_int(v[1])};
      if (p.base < 2) bad("SKS base below 2");
      return p;
    }
    case Method::kIks: {
      auto v = fields(tokens, {"n", "exponents"});
      IksPlan p{parse_list(v[1])};
      if (p.exponents.size() != n_of(v[0])) bad("IKS exponent count does not match n");
      if (p.exponents[0] != 1) bad("IKS plan must start with D_1 = 1");
      for (const auto& d : p.exponents) {
        if (d < 1) bad("IKS exponents must be positive");
      }
      return p;
    }
    case Method::kCrt: {
      auto v = fields(tokens, {"n", "bases", "product", "cofactors", "inverses"});
      auto bases = parse_list(v[1]);
      if (bases.size() != n_of(v[0])) bad("CRT base count does not match n");
      CrtPlan p;
      try {
        p = make_crt_plan(std::move(bases));
      } catch (const Error& e) {
        bad(e.what());
      }
      if (p.product != parse_int(v[2]) || p.cofactors != parse_list(v[3]) ||
          p.inverses != parse_list(v[4])) {
        bad("CRT plan fields are inconsistent with its bases");
      }
      return p;
    }
    case Method::kHybrid: {
      auto v = fields(tokens, {"n", "steps"});
      HybridPlan p{n_of(v[0]), {}};
      if (p.nvars > 1) {
        for (const auto& rec : split(v[1], ';')) {
          auto part = split(rec, ':');
          if (part.size() != 5 && part.size() != 7) bad("malformed hybrid step '" + rec + "'");
          HybridStep s;
          s.round = parse_index(part[0]);
          s.var_i = parse_index(part[1]);
          s.var_j = parse_index(part[2]);
          s.base = parse_int(part[4]);
          if (part[3] == "crt" && part.size() == 7) {
            s.branch = HybridBranch::kCrt;
            s.offset_f = parse_int(part[5]);
            s.offset_g = parse_int(part[6]);
          } else if (part[3] == "iks" && part.size() == 5) {
            s.branch = HybridBranch::kIks;
          } else {
            bad("malformed hybrid step '" + rec + "'");
          }
          if (s.base < 1) bad("hybrid step base must be positive");
          p.steps.push_back(std::move(s));
        }
      } else if (!v[1].empty()) {
        bad("a one-variable hybrid plan has no steps");
      }
      if (p.steps.size() + 1 != p.nvars) bad("hybrid plan needs n - 1 steps");
      for (std::size_t k = 0; k < p.steps.size(); ++k) {
        const auto& s = p.steps[k];
        if (s.round != k + 2 || s.var_i != 1 || s.var_j != s.round) {
          bad("hybrid rounds must run 2..n on the pair (x1, xr)");
        }
      }
      return p;
    }
    case Method::kSequence: {
      auto v = fields(tokens, {"n", "steps"});
      SequencePlan p{n_of(v[0]), {}};
      if (p.nvars > 1) {
        for (const auto& rec : split(v[1], ';')) {
          auto colon = rec.find(':');
          auto arrow = rec.find('>');
          if (colon == std::string::npos || arrow == std::string::npos || arrow > colon) {
            bad("malformed sequence step '" + rec + "'");
          }
          SequenceStep s;
          s.sub.from = parse_index(rec.substr(0, arrow));
          s.sub.to = parse_index(rec.substr(arrow + 1, colon - arrow - 1));
          s.exponent = parse_int(rec.substr(colon + 1));
          if (s.exponent < 1) bad("substitution exponents must be positive");
          p.steps.push_back(std::move(s));
        }
      } else if (!v[1].empty()) {
        bad("a one-variable sequence plan has no steps");
      }
      if (p.steps.size() + 1 != p.nvars) bad("sequence plan needs n - 1 steps");
      return p;
    }
  }
  bad("unreachable");
}

}  // namespace polyred
