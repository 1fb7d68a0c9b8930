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

#include "polyred/unimul.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <vector>

namespace polyred {
namespace {

using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;
using Wide256 = boost::multiprecision::int256_t;
using Wide512 = boost::multiprecision::int512_t;

constexpr std::array<NttPrime, 19> kPrimes = {{
    {2130706433, 3, 24},  {2113929217, 5, 25},  {2088763393, 5, 23},  {2013265921, 31, 27},
    {1811939329, 13, 26}, {1711276033, 29, 25}, {1484783617, 5, 23},  {1300234241, 3, 23},
    {1224736769, 3, 24},  {1107296257, 10, 25}, {998244353, 3, 23},   {897581057, 3, 23},
    {880803841, 26, 23},  {754974721, 11, 24},  {645922817, 3, 23},   {595591169, 3, 23},
    {469762049, 3, 26},   {377487361, 7, 23},   {167772161, 3, 25},
}};

Integer from_i128(i128 v) {
  bool neg = v < 0;
  u128 mag = neg ? u128(0) - static_cast<u128>(v) : static_cast<u128>(v);
  Integer out = Integer(static_cast<u64>(mag >> 64));
  out <<= 64;
  out += static_cast<u64>(mag);
  return neg ? Integer(-out) : out;
}

Integer abs_max_coeff(const UniPoly& p) {
  Integer best = 0;
  for (const auto& t : p.terms()) {
    Integer m = t.coeff < 0 ? Integer(-t.coeff) : t.coeff;
    if (m > best) best = std::move(m);
  }
  return best;
}

std::optional<std::vector<u64>> word_exponents(const UniPoly& p) {
  std::vector<u64> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    auto e = fits_u64(t.exponent);
    if (!e) return std::nullopt;
    out.push_back(*e);
  }
  return out;
}

// Sums coefficient products grouped by exponent. `mul_add(acc, i, j)` adds
// a_i * b_j into acc. A dense accumulator is used when the exponent range is
// small compared to the number of products, otherwise products are sorted.
template <typename Acc, typename MulAdd, typename IsZero, typename ToInteger>
void accumulate(const std::vector<u64>& ea, const std::vector<u64>& eb, MulAdd mul_add,
                IsZero is_zero, ToInteger to_integer, UniTermList& out) {
  const u64 top = ea.front() + eb.front();
  const u64 products = static_cast<u64>(ea.size()) * eb.size();
  out.terms.reserve(std::min<u64>(products, top + 1));
  if (top < (u64{1} << 22) && top / 8 <= products) {
    std::vector<Acc> dense(top + 1, Acc{});
    for (std::size_t i = 0; i < ea.size(); ++i) {
      for (std::size_t j = 0; j < eb.size(); ++j) mul_add(dense[ea[i] + eb[j]], i, j);
    }
    for (u64 e = top + 1; e-- > 0;) {
      if (!is_zero(dense[e])) out.push(Integer(e), to_integer(dense[e]));
    }
    return;
  }
  struct Product {
    u64 exponent;
    std::uint32_t i, j;
  };
  std::vector<Product> prods;
  prods.reserve(products);
  for (std::size_t i = 0; i < ea.size(); ++i) {
    for (std::size_t j = 0; j < eb.size(); ++j) {
      prods.push_back({ea[i] + eb[j], static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    }
  }
  std::sort(prods.begin(), prods.end(),
            [](const Product& x, const Product& y) { return x.exponent > y.exponent; });
  for (std::size_t k = 0; k < prods.size();) {
    Acc acc{};
    std::size_t end = k;
    for (; end < prods.size() && prods[end].exponent == prods[k].exponent; ++end) {
      mul_add(acc, prods[end].i, prods[end].j);
    }
    if (!is_zero(acc)) out.push(Integer(prods[k].exponent), to_integer(acc));
    k = end;
  }
}

template <typename Wide>
bool accumulate_fixed(const UniPoly& a, const UniPoly& b, const std::vector<u64>& ea,
                      const std::vector<u64>& eb, UniTermList& out) {
  std::vector<Wide> wa, wb;
  for (const auto& t : a.terms()) wa.emplace_back(t.coeff);
  for (const auto& t : b.terms()) wb.emplace_back(t.coeff);
  accumulate<Wide>(
      ea, eb, [&](Wide& acc, std::size_t i, std::size_t j) { acc += wa[i] * wb[j]; },
      [](const Wide& v) { return v == 0; }, [](const Wide& v) { return Integer(v); }, out);
  return true;
}

// Word-size paths; returns false when the operands do not qualify.
bool mul_sparse_words(const UniPoly& a, const UniPoly& b, UniTermList& out) {
  auto ea = word_exponents(a);
  auto eb = word_exponents(b);
  if (!ea || !eb) return false;
  if (ea->front() > std::numeric_limits<u64>::max() - eb->front()) return false;
  if (a.size() >= (u64{1} << 32) || b.size() >= (u64{1} << 32)) return false;

  const RingSpec& ring = a.ring();
  if (ring.is_field()) {
    const u64 q = ring.modulus();
    std::vector<u64> ca, cb;
    for (const auto& t : a.terms()) ca.push_back(static_cast<u64>(t.coeff));
    for (const auto& t : b.terms()) cb.push_back(static_cast<u64>(t.coeff));
    if (q < (u64{1} << 32)) {
      // Products stay below 2^64, so 2^64 of them fit in an unreduced u128.
      accumulate<u128>(
          *ea, *eb, [&](u128& acc, std::size_t i, std::size_t j) { acc += u128(ca[i] * cb[j]); },
          [q](u128 v) { return v % q == 0; }, [q](u128 v) { return Integer(u64(v % q)); }, out);
      return true;
    }
    accumulate<u64>(
        *ea, *eb,
        [&](u64& acc, std::size_t i, std::size_t j) {
          u64 x = mulmod_u64(ca[i], cb[j], q);
          u64 s = acc + x;
          if (s < acc || s >= q) s -= q;
          acc = s;
        },
        [](u64 v) { return v == 0; }, [](u64 v) { return Integer(v); }, out);
    return true;
  }

  const Integer max_a = abs_max_coeff(a);
  const Integer max_b = abs_max_coeff(b);
  const Integer bound = max_a * max_b * static_cast<u64>(std::min(a.size(), b.size()));
  const Integer word = Integer(1) << 62;
  if (max_a >= word || max_b >= word || bound >= (Integer(1) << 126)) {
    // Fixed-width limbs avoid an allocation per product.
    if (bound < (Integer(1) << 250)) return accumulate_fixed<Wide256>(a, b, *ea, *eb, out);
    if (bound < (Integer(1) << 500)) return accumulate_fixed<Wide512>(a, b, *ea, *eb, out);
    return false;
  }
  std::vector<std::int64_t> ca, cb;
  for (const auto& t : a.terms()) ca.push_back(static_cast<std::int64_t>(t.coeff));
  for (const auto& t : b.terms()) cb.push_back(static_cast<std::int64_t>(t.coeff));
  accumulate<i128>(
      *ea, *eb,
      [&](i128& acc, std::size_t i, std::size_t j) { acc += static_cast<i128>(ca[i]) * cb[j]; },
      [](i128 v) { return v == 0; }, from_i128, out);
  return true;
}

// ---- number-theoretic transform over one 31-bit prime ----

void ntt(std::vector<u64>& a, const NttPrime& prime, bool inverse) {
  const u64 p = prime.modulus;
  const std::size_t len = a.size();
  for (std::size_t i = 1, j = 0; i < len; ++i) {
    std::size_t bit = len >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t half = 1; half < len; half <<= 1) {
    u64 w = powmod_u64(prime.primitive_root, (p - 1) / (2 * half), p);
    if (inverse) w = powmod_u64(w, p - 2, p);
    std::vector<u64> tw(half);
    tw[0] = 1;
    for (std::size_t k = 1; k < half; ++k) tw[k] = tw[k - 1] * w % p;
    for (std::size_t start = 0; start < len; start += 2 * half) {
      for (std::size_t k = 0; k < half; ++k) {
        u64 u = a[start + k];
        u64 v = a[start + k + half] * tw[k] % p;
        a[start + k] = u + v >= p ? u + v - p : u + v;
        a[start + k + half] = u >= v ? u - v : u + p - v;
      }
    }
  }
  if (inverse) {
    u64 inv_len = powmod_u64(len, p - 2, p);
    for (auto& x : a) x = x * inv_len % p;
  }
}

std::vector<u64> convolve_mod(const std::vector<std::pair<u64, u64>>& a,
                              const std::vector<std::pair<u64, u64>>& b, std::size_t len,
                              const NttPrime& prime) {
  const u64 p = prime.modulus;
  std::vector<u64> fa(len, 0), fb(len, 0);
  for (const auto& [e, c] : a) fa[e] = c % p;
  for (const auto& [e, c] : b) fb[e] = c % p;
  ntt(fa, prime, false);
  ntt(fb, prime, false);
  for (std::size_t i = 0; i < len; ++i) fa[i] = fa[i] * fb[i] % p;
  ntt(fa, prime, true);
  return fa;
}

}  // namespace

std::span<const NttPrime> ntt_primes() { return kPrimes; }

Integer ntt_coefficient_bound(const UniPoly& a, const UniPoly& b) {
  return 2 * abs_max_coeff(a) * abs_max_coeff(b) *
         static_cast<u64>(std::min(a.size(), b.size()));
}

std::size_t ntt_primes_needed(const Integer& bound) {
  Integer product = 1;
  for (std::size_t k = 0; k < kPrimes.size(); ++k) {
    product *= kPrimes[k].modulus;
    if (product > bound) return k + 1;
  }
  return 0;
}

UniPoly mul_sparse(const UniPoly& a, const UniPoly& b) {
  require_same_ring(a.ring(), b.ring());
  UniTermList out(a.ring());
  if (a.is_zero() || b.is_zero()) return normalize(std::move(out));
  if (!mul_sparse_words(a, b, out)) {
    out.terms.reserve(a.size() * b.size());
    for (const auto& x : a.terms()) {
      for (const auto& y : b.terms()) out.push(x.exponent + y.exponent, x.coeff * y.coeff);
    }
  }
  return normalize(std::move(out));
}

UniPoly mul_ntt(const UniPoly& a, const UniPoly& b, const BackendChoice& choice) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return UniPoly(a.ring());
  const Integer top = a.degree().value() + b.degree().value();
  if (top >= choice.dense_threshold || top >= (Integer(1) << 23)) {
    raise(ErrorKind::kDegreeTooLarge,
          "product degree " + top.str() + " is not below the dense threshold " +
              std::to_string(choice.dense_threshold));
  }
  const std::size_t count = ntt_primes_needed(ntt_coefficient_bound(a, b));
  if (count == 0) raise(ErrorKind::kCoefficientTooLarge, "coefficients exceed the NTT prime range");

  std::size_t len = 1;
  while (len <= static_cast<std::size_t>(top)) len <<= 1;

  // Residues of each coefficient; GF(q) elements are already in [0, q).
  std::vector<std::vector<std::pair<u64, u64>>> ra(count), rb(count);
  auto residues = [&](const UniPoly& p, std::vector<std::vector<std::pair<u64, u64>>>& out) {
    for (const auto& t : p.terms()) {
      const u64 e = static_cast<u64>(t.exponent);
      for (std::size_t k = 0; k < count; ++k) {
        const Integer m = kPrimes[k].modulus;
        out[k].emplace_back(e, static_cast<u64>(mod_floor(t.coeff, m)));
      }
    }
  };
  residues(a, ra);
  residues(b, rb);

  std::vector<std::vector<u64>> conv(count);
  for (std::size_t k = 0; k < count; ++k) conv[k] = convolve_mod(ra[k], rb[k], len, kPrimes[k]);

  // Garner: mixed-radix digits v_k with x = v_0 + v_1 p_0 + v_2 p_0 p_1 + ...
  std::vector<std::vector<u64>> inv(count, std::vector<u64>(count, 0));
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t m = 0; m < k; ++m) {
      inv[m][k] = powmod_u64(kPrimes[m].modulus % kPrimes[k].modulus, kPrimes[k].modulus - 2,
                             kPrimes[k].modulus);
    }
  }
  std::vector<Integer> radix(count);
  Integer total = 1;
  for (std::size_t k = 0; k < count; ++k) {
    radix[k] = total;
    total *= kPrimes[k].modulus;
  }
  const Integer half = total / 2;
  const bool field = a.ring().is_field();

  UniTermList out(a.ring());
  std::vector<u64> digit(count);
  for (std::size_t e = 0; e <= static_cast<std::size_t>(top); ++e) {
    bool all_zero = true;
    for (std::size_t k = 0; k < count; ++k) all_zero = all_zero && conv[k][e] == 0;
    if (all_zero) continue;
    for (std::size_t k = 0; k < count; ++k) {
      const u64 p = kPrimes[k].modulus;
      u64 v = conv[k][e];
      for (std::size_t m = 0; m < k; ++m) {
        v = (v + p - digit[m] % p) % p * inv[m][k] % p;
      }
      digit[k] = v;
    }
    Integer x = 0;
    for (std::size_t k = count; k-- > 0;) x = x * kPrimes[k].modulus + digit[k];
    if (!field && x > half) x -= total;
    out.push(Integer(e), std::move(x));
  }
  return normalize(std::move(out));
}

Backend choose_backend(const UniPoly& a, const UniPoly& b, const BackendChoice& choice) {
  if (choice.kind != Backend::kAuto) return choice.kind;
  if (a.is_zero() || b.is_zero()) return Backend::kSparseSchoolbook;
  const Integer da = a.degree().value();
  const Integer db = b.degree().value();
  if (da + db >= choice.dense_threshold) return Backend::kSparseSchoolbook;
  // terms / (deg + 1) > 1/64
  const bool dense = 64 * Integer(a.size()) > da + 1 && 64 * Integer(b.size()) > db + 1;
  if (!dense) return Backend::kSparseSchoolbook;
  if (ntt_primes_needed(ntt_coefficient_bound(a, b)) == 0) return Backend::kSparseSchoolbook;
  return Backend::kDenseNtt;
}

UniPoly multiply(const UniPoly& a, const UniPoly& b, const BackendChoice& choice) {
  if (choose_backend(a, b, choice) == Backend::kDenseNtt) return mul_ntt(a, b, choice);
  return mul_sparse(a, b);
}

}  // namespace polyred
