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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "polyred/integer.hpp"
#include "polyred/multipoly.hpp"
#include "polyred/unipoly.hpp"

namespace polyred {

// Reversible reductions of a pair (f, g) of n-variable polynomials to a pair
// of univariate polynomials whose product determines f*g:
//
//   SKS     one-shot Kronecker substitution x_i -> x^(B^(i-1)), B = max deg_i(f*g) + 1
//   IKS     iterative substitution x_r -> x_1^(D_r), r = 2..n, with D_r one more
//           than the current x_1-degree of f*g
//   CRT     exponent vector -> its residue-system integer modulo prod(p_i)
//   Hybrid  per round r, either a two-variable CRT step on (x_1, x_r) with
//           bases (p, p - 1), or an IKS step, whichever predicts the smaller degree
//
// A general substitution sequence (any elimination order) is also supported,
// mainly to search for the best order on small inputs.

enum class Method { kSks, kIks, kCrt, kHybrid, kSequence };

struct SksPlan {
  std::size_t nvars = 0;
  Integer base;
};

struct IksPlan {
  // D_1 = 1, D_2, ..., D_n.
  std::vector<Integer> exponents;
};

struct CrtPlan {
  std::vector<Integer> bases;
  Integer product;                  // M
  std::vector<Integer> cofactors;   // M / p_i
  std::vector<Integer> inverses;    // (M / p_i)^-1 mod p_i, in [1, p_i)
};

// x_from -> x_to (1-based).
struct Substitution {
  std::size_t from = 0;
  std::size_t to = 0;

  friend bool operator==(const Substitution&, const Substitution&) = default;
};

struct SequenceStep {
  Substitution sub;
  Integer exponent;
};

struct SequencePlan {
  std::size_t nvars = 0;
  std::vector<SequenceStep> steps;
};

enum class HybridBranch { kCrt, kIks };

struct HybridStep {
  std::size_t round = 0;  // r, 2..n
  std::size_t var_i = 1;  // always x_1
  std::size_t var_j = 0;  // x_r
  HybridBranch branch = HybridBranch::kIks;
  // CRT branch: base p (the partner base is p - 1). IKS branch: exponent D.
  Integer base;
  // CRT branch only: x_j shifts applied to f and g. May be negative when
  // every term of the polynomial has k_j > k_i.
  Integer offset_f;
  Integer offset_g;
};

struct HybridPlan {
  std::size_t nvars = 0;
  std::vector<HybridStep> steps;
};

using Plan = std::variant<SksPlan, IksPlan, CrtPlan, HybridPlan, SequencePlan>;

Method plan_method(const Plan& plan);
std::size_t plan_nvars(const Plan& plan);

// Loop-level integer multiplications (including divisions and remainders)
// and additions (including subtractions) spent in a reduction.
struct OpCounts {
  std::uint64_t mul = 0;
  std::uint64_t add = 0;
};

struct ReductionOutcome {
  Method method = Method::kSks;
  UniPoly f_x;
  UniPoly g_x;
  Plan plan;
  OpCounts ops;

  // deg(f_x) + deg(g_x), which is deg(f_x * g_x).
  Integer product_degree() const;
};

// ---- standard Kronecker substitution ----
Integer sks_base(const MultiPoly& f, const MultiPoly& g);
ReductionOutcome sks_reduce(const MultiPoly& f, const MultiPoly& g);
// Throws ExponentOutOfRange if an exponent is >= base^n.
MultiPoly sks_inverse(const UniPoly& h, const SksPlan& plan);

// ---- iterative Kronecker substitution ----
ReductionOutcome iks_reduce(const MultiPoly& f, const MultiPoly& g);
MultiPoly iks_inverse(const UniPoly& h, const IksPlan& plan);

// ---- arbitrary substitution sequences ----
// Throws InvalidSequence unless seq has n - 1 steps, each eliminating a
// distinct live variable into another live variable.
ReductionOutcome apply_sequence(const MultiPoly& f, const MultiPoly& g,
                                std::span<const Substitution> seq);
MultiPoly sequence_inverse(const UniPoly& h, const SequencePlan& plan);

// Every variable is sent to the same target.
bool is_straight_pattern(std::span<const Substitution> seq);

// x_2 -> x_1, ..., x_n -> x_1.
std::vector<Substitution> iks_sequence(std::size_t nvars);

// All n!(n-1)! valid sequences in lexicographic order of (from_1, to_1, ...).
std::vector<std::vector<Substitution>> all_sequences(std::size_t nvars);

struct SequenceSearch {
  std::vector<Substitution> sequence;  // lexicographically least minimizer
  Integer product_degree;              // its deg(f_x) + deg(g_x)
  Integer best_straight_degree;        // minimum over straight-pattern sequences
  std::size_t evaluated = 0;

  bool straight_minimizer_exists() const { return best_straight_degree == product_degree; }
};

// Exhaustive; throws TooManyVariables when nvars > max_nvars.
SequenceSearch find_optimal_sequence(const MultiPoly& f, const MultiPoly& g,
                                     std::size_t max_nvars = 4);

// ---- degree bounds, from the per-variable degrees of f*g ----
struct DegreeBounds {
  Integer lower;
  Integer upper;
};
// prod d_i <= deg < prod (d_i + 1); `upper` is exclusive.
DegreeBounds iks_bounds(const MultiPoly& f, const MultiPoly& g);
// d_n * B^(n-1) <= deg <= B^n - 1; `upper` is inclusive.
DegreeBounds sks_bounds(const MultiPoly& f, const MultiPoly& g);

// ---- CRT reduction ----
// Left to right, bump each entry by one until it is coprime to all earlier ones.
std::vector<Integer> adjust_coprime(std::span<const Integer> initial);

// Extended Euclid. Throws NotInvertible when gcd(a, m) != 1, InvalidArgument when m < 2.
Integer modinv(const Integer& a, const Integer& m);
// Same, also counting division steps.
Integer modinv(const Integer& a, const Integer& m, std::uint64_t& steps);

// Throws BasesNotCoprime, BasesTooSmall (any base < 2).
CrtPlan make_crt_plan(std::vector<Integer> bases);

// Without explicit bases, uses adjust_coprime(max(2, deg_i(f*g) + 1)).
ReductionOutcome crt_reduce(const MultiPoly& f, const MultiPoly& g,
                            std::optional<std::vector<Integer>> bases = std::nullopt);
MultiPoly crt_inverse(const UniPoly& h, const CrtPlan& plan);

// ---- hybrid reduction ----
struct CrtEstimate {
  Integer estimate;   // predicted x_i-degree of the product after a CRT step
  Integer base;       // p
  Integer offset_f;   // Max_f(j, i)
  Integer offset_g;   // Max_g(j, i)
};

CrtEstimate d_crt_estimate(const MultiPoly& f, const MultiPoly& g, std::size_t i, std::size_t j);

ReductionOutcome hybrid_reduce(const MultiPoly& f, const MultiPoly& g);
// Throws NegativeExponent when h could not have come from this plan.
MultiPoly hybrid_inverse(const UniPoly& h, const HybridPlan& plan);

// ---- method-generic entry points ----
struct ReduceOptions {
  std::optional<std::vector<Integer>> crt_bases;
  std::vector<Substitution> sequence;  // Method::kSequence only
};

ReductionOutcome reduce(const MultiPoly& f, const MultiPoly& g, Method method,
                        const ReduceOptions& options = {});

MultiPoly recover(const UniPoly& h, const Plan& plan, const RingSpec& ring);

enum class ImageRole { kF, kG, kProduct };

// Univariate exponent assigned to monomial x^k by the plan. CRT images are
// reduced modulo M for every role; hybrid CRT steps use the f, g, or summed
// offset depending on the role.
Integer image_exponent(const Plan& plan, std::span<const Exponent> k,
                       ImageRole role = ImageRole::kProduct);

}  // namespace polyred
