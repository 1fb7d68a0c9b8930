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

#include <doctest.h>

#include "polyred/integer.hpp"
#include "polyred/text.hpp"
#include "polyred/unimul.hpp"
#include "support.hpp"

using namespace polyred;

namespace {

const RingSpec kZZ;

UniPoly U(const char* text, const RingSpec& ring = kZZ) { return parse_unipoly(text, ring); }

template <class F>
ErrorKind kind_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kInvalidArgument;
}

const BackendChoice kSparse{Backend::kSparseSchoolbook};
const BackendChoice kDense{Backend::kDenseNtt};

}  // namespace

TEST_CASE("golden products") {
  auto a = U("x^1911 + x^4465"), b = U("x^8752 + x^2184");
  auto h = U("x^13217 + x^10663 + x^6649 + x^4095");
  CHECK(mul_sparse(a, b) == h);
  CHECK(mul_ntt(a, b) == h);
  CHECK(multiply(a, b) == h);

  CHECK(mul_sparse(U("x + 1"), U("x - 1")) == U("x^2 - 1"));
  CHECK(mul_ntt(U("x + 1"), U("x - 1")) == U("x^2 - 1"));
  CHECK(mul_ntt(U("-3*x^2 + 2"), U("-5*x^3 - 7")) == U("15*x^5 + 21*x^2 - 10*x^3 - 14"));

  const RingSpec& f = testing::test_field();
  CHECK(mul_ntt(U("1000002*x + 2", f), U("x + 1", f)) == U("1000002*x^2 + x + 2", f));
}

TEST_CASE("zero and constants") {
  UniPoly zero(kZZ);
  auto a = U("3*x^7 - x + 4");
  for (const auto& choice : {kSparse, kDense}) {
    CHECK(multiply(a, zero, choice).is_zero());
    CHECK(multiply(zero, a, choice).is_zero());
    CHECK(multiply(a, U("1"), choice) == a);
    CHECK(multiply(U("-2"), a, choice) == U("-6*x^7 + 2*x - 8"));
  }
}

TEST_CASE("dense products agree with the schoolbook product") {
  testing::Rng rng(31);
  const RingSpec big = RingSpec::prime_field(18446744073709551557ull);
  for (int i = 0; i < 20; ++i) {
    auto a = testing::random_dense(rng, 1000, testing::test_field(), false);
    auto b = testing::random_dense(rng, 1000, testing::test_field(), false);
    CHECK(mul_ntt(a, b) == mul_sparse(a, b));

    auto c = testing::random_dense(rng, 300, big, false);
    auto d = testing::random_dense(rng, 300, big, false);
    CHECK(mul_ntt(c, d) == mul_sparse(c, d));
  }
  for (int i = 0; i < 20; ++i) {
    UniTermList ta(kZZ), tb(kZZ);
    for (int e = 0; e <= 512; ++e) {
      ta.push(e, rng.signed_uniform(-100, 100));
      tb.push(e, rng.signed_uniform(-100, 100));
    }
    auto a = normalize(std::move(ta)), b = normalize(std::move(tb));
    CHECK(mul_ntt(a, b) == mul_sparse(a, b));
  }
  for (int i = 0; i < 10; ++i) {
    auto a = testing::random_dense(rng, 700, kZZ, true);
    auto b = testing::random_dense(rng, 500, kZZ, true);
    CHECK(mul_ntt(a, b) == mul_sparse(a, b));
  }
}

TEST_CASE("ring laws") {
  testing::Rng rng(32);
  for (const RingSpec* ring : {&kZZ, &testing::test_field()}) {
    for (int i = 0; i < 30; ++i) {
      auto a = testing::random_dense(rng, rng.uniform(0, 200), *ring, true);
      auto b = testing::random_dense(rng, rng.uniform(0, 200), *ring, true);
      auto c = testing::random_dense(rng, rng.uniform(0, 200), *ring, true);
      CHECK(multiply(a, b) == multiply(b, a));
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
      CHECK(multiply(a, add(b, c)) == add(multiply(a, b), multiply(a, c)));
    }
  }
}

TEST_CASE("backend selection") {
  auto dense = U("x^3 + 2*x^2 + 3*x + 4");
  auto sparse = U("x^1000000 + 1");
  BackendChoice automatic;
  CHECK(choose_backend(dense, dense, automatic) == Backend::kDenseNtt);
  CHECK(choose_backend(sparse, dense, automatic) == Backend::kSparseSchoolbook);
  CHECK(choose_backend(dense, dense, kSparse) == Backend::kSparseSchoolbook);
  CHECK(choose_backend(sparse, sparse, kDense) == Backend::kDenseNtt);

  BackendChoice small{Backend::kAuto, 6};
  CHECK(choose_backend(dense, dense, small) == Backend::kSparseSchoolbook);
  BackendChoice small_dense{Backend::kDenseNtt, 6};
  CHECK(kind_of([&] { mul_ntt(dense, dense, small_dense); }) == ErrorKind::kDegreeTooLarge);
  CHECK(mul_ntt(dense, U("x^2"), small_dense) == U("x^5 + 2*x^4 + 3*x^3 + 4*x^2"));

  // Past what all primes together can hold: auto falls back to the sparse path.
  Integer huge = Integer(1) << 400;
  UniTermList t(kZZ);
  for (int e = 0; e < 8; ++e) t.push(e, huge + e);
  auto wide = normalize(std::move(t));
  CHECK(choose_backend(wide, wide, automatic) == Backend::kSparseSchoolbook);
  CHECK(kind_of([&] { mul_ntt(wide, wide); }) == ErrorKind::kCoefficientTooLarge);
  CHECK(multiply(wide, wide) == mul_sparse(wide, wide));

  CHECK(kind_of([&] { mul_sparse(dense, U("x", testing::test_field())); }) ==
        ErrorKind::kRingMismatch);
  CHECK(kind_of([&] { mul_ntt(dense, U("x", testing::test_field())); }) == ErrorKind::kRingMismatch);
}

TEST_CASE("ntt prime table") {
  auto primes = ntt_primes();
  REQUIRE(primes.size() >= 2);
  Integer product = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const auto& p = primes[i];
    CAPTURE(p.modulus);
    CHECK(p.modulus < (std::uint64_t{1} << 31));
    CHECK(is_prime_u64(p.modulus));
    CHECK(p.two_adicity >= 23);
    CHECK((p.modulus - 1) % (std::uint64_t{1} << p.two_adicity) == 0);
    CHECK(powmod_u64(p.primitive_root, (p.modulus - 1) / 2, p.modulus) == p.modulus - 1);
    if (i > 0) CHECK(p.modulus < primes[i - 1].modulus);
    product *= p.modulus;
  }

  for (const Integer& bound :
       std::vector<Integer>{Integer(1), Integer(1) << 40, Integer(1) << 200, product / 2}) {
    std::size_t k = ntt_primes_needed(bound);
    REQUIRE(k > 0);
    Integer m = 1;
    for (std::size_t i = 0; i < k; ++i) m *= primes[i].modulus;
    CHECK(m > bound);
    CHECK(m / primes[k - 1].modulus <= bound);
  }
  CHECK(ntt_primes_needed(product) == 0);

  CHECK(ntt_coefficient_bound(U("3*x + 1"), U("-5*x^2 + x + 1")) == 2 * 3 * 5 * 2);
}
