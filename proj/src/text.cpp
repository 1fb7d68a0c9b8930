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

#include "polyred/text.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace polyred {
namespace {

struct Factor {
  std::size_t var;  // 0 for the bare univariate 'x'
  Integer exponent;
  std::size_t offset;
};

struct ParsedTerm {
  Integer coeff;
  std::vector<Factor> factors;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> terms;
    skip_ws();
    if (at_end()) fail("empty input");
    terms.push_back(term(false));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = text_[pos_];
      if (c != '+' && c != '-') fail(std::string("expected '+' or '-', found '") + c + "'");
      ++pos_;
      skip_ws();
      terms.push_back(term(c == '-'));
    }
    return terms;
  }

 private:
  ParsedTerm term(bool negated) {
    ParsedTerm t;
    t.coeff = 1;
    bool minus = false;
    if (peek() == '-') {
      minus = true;
      ++pos_;
      skip_ws();
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = Integer(digits());
    } else {
      t.factors.push_back(factor());
    }
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      skip_ws();
      t.factors.push_back(factor());
    }
    if (minus != negated) t.coeff = -t.coeff;
    return t;
  }

  Factor factor() {
    Factor f{0, 1, pos_};
    if (peek() != 'x') fail("expected a variable 'x'");
    ++pos_;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string idx = digits();
      if (idx.size() > 9) {
        throw Error(ErrorKind::kUnknownVariable,
                    "x" + idx + " at offset " + std::to_string(f.offset));
      }
      f.var = std::stoul(idx);
      if (f.var == 0) {
        throw Error(ErrorKind::kUnknownVariable, "x0 at offset " + std::to_string(f.offset));
      }
    }
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent after '^'");
      f.exponent = Integer(digits());
    }
    return f;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_coeff(std::string& out, const Integer& c, bool first, bool has_factors) {
  Integer mag = c < 0 ? Integer(-c) : c;
  if (first) {
    if (c < 0) out += '-';
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (!has_factors) {
    out += mag.str();
  } else if (mag != 1) {
    out += mag.str();
    out += '*';
  }
}

}  // namespace

MultiPoly parse_poly(std::string_view text, std::size_t nvars, const RingSpec& ring) {
  TermList list(ring, nvars);
  std::vector<Exponent> e(nvars);
  for (auto& t : Parser(text).parse()) {
    std::fill(e.begin(), e.end(), 0);
    for (const auto& f : t.factors) {
      if (f.var == 0 || f.var > nvars) {
        std::string name = f.var == 0 ? "x" : "x" + std::to_string(f.var);
        throw Error(ErrorKind::kUnknownVariable,
                    name + " at offset " + std::to_string(f.offset) + " (" +
                        std::to_string(nvars) + " variables)");
      }
      auto v = fits_u64(f.exponent);
      if (!v) {
        throw Error(ErrorKind::kExponentOverflow,
                    "exponent at offset " + std::to_string(f.offset) + " exceeds 64 bits");
      }
      e[f.var - 1] = checked_add(e[f.var - 1], *v);
    }
    list.push(e, std::move(t.coeff));
  }
  return normalize(std::move(list));
}

std::string format_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t t = 0; t < p.size(); ++t) {
    auto e = p.exponents(t);
    std::vector<std::string> factors;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      std::string f = "x" + std::to_string(v + 1);
      if (e[v] != 1) f += "^" + std::to_string(e[v]);
      factors.push_back(std::move(f));
    }
    append_coeff(out, p.coeff(t), t == 0, !factors.empty());
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) out += '*';
      out += factors[k];
    }
  }
  return out;
}

UniPoly parse_unipoly(std::string_view text, const RingSpec& ring) {
  UniTermList list(ring);
  for (auto& t : Parser(text).parse()) {
    Integer k = 0;
    for (const auto& f : t.factors) {
      if (f.var != 0) {
        throw Error(ErrorKind::kUnknownVariable,
                    "x" + std::to_string(f.var) + " at offset " + std::to_string(f.offset) +
                        " in a univariate polynomial");
      }
      k += f.exponent;
    }
    list.push(std::move(k), std::move(t.coeff));
  }
  return normalize(std::move(list));
}

std::string format_unipoly(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool has_x = t.exponent != 0;
    append_coeff(out, t.coeff, first, has_x);
    if (has_x) {
      out += 'x';
      if (t.exponent != 1) out += "^" + t.exponent.str();
    }
    first = false;
  }
  return out;
}

}  // namespace polyred
