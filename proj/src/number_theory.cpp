// Copyright 2026 The ufrac Authors.
//
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

#include "ufrac/number_theory.hpp"

#include <algorithm>
#include <map>

namespace ufrac {
namespace {

constexpr std::uint32_t kSieveLimit = 1'000'000;

std::vector<std::uint32_t> build_sieve() {
  std::vector<bool> composite(kSieveLimit, false);
  std::vector<std::uint32_t> primes;
  primes.reserve(78'500);
  for (std::uint32_t i = 2; i < kSieveLimit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j < kSieveLimit; j += i) {
      composite[j] = true;
    }
  }
  return primes;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

// Brent's variant of Pollard rho. n is odd, composite, and not a perfect power
// of a sieve prime.
Integer pollard_rho(const Integer& n) {
  for (unsigned long seed = 1;; ++seed) {
    Integer x = 2, y = 2, q = 1, g = 1, ys;
    auto f = [&](const Integer& v) {
      Integer out = v * v + seed;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  // Rho is hopeless on p^k with large p, so take exact roots first.
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    const unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long k = bits; k >= 2; --k) {
      Integer root;
      if (!mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) continue;
      std::map<Integer, unsigned> inner;
      factor_large(root, inner);
      for (const auto& [p, e] : inner) out[p] += e * static_cast<unsigned>(k);
      return;
    }
  }
  Integer d = pollard_rho(n);
  factor_large(d, out);
  factor_large(Integer(n / d), out);
}

}  // namespace

std::span<const std::uint32_t> small_primes() {
  static const std::vector<std::uint32_t> primes = build_sieve();
  return primes;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These bases make Miller-Rabin exact for all n < 2^64.
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (sgn(n) <= 0) return false;
  if (n.fits_ulong_p()) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::vector<PrimePower> factorize(const Integer& n) {
  if (n == 0) throw InvalidInput("cannot factorize 0");
  Integer cof = abs(n);
  std::vector<PrimePower> out;
  for (std::uint32_t p : small_primes()) {
    if (cof == 1) break;
    if (cof.fits_ulong_p() && std::uint64_t{p} * p > cof.get_ui()) break;
    if (!mpz_divisible_ui_p(cof.get_mpz_t(), p)) continue;
    PrimePower pp{Integer(p), 0, Integer(1)};
    do {
      mpz_divexact_ui(cof.get_mpz_t(), cof.get_mpz_t(), p);
      pp.value *= p;
      ++pp.exponent;
    } while (mpz_divisible_ui_p(cof.get_mpz_t(), p));
    out.push_back(std::move(pp));
  }
  if (cof != 1) {
    std::map<Integer, unsigned> rest;
    factor_large(cof, rest);
    for (auto& [p, e] : rest) {
      Integer value;
      mpz_pow_ui(value.get_mpz_t(), p.get_mpz_t(), e);
      out.push_back(PrimePower{p, e, std::move(value)});
    }
  }
  return out;
}

std::optional<PrimePower> greatest_prime_power(const Rational& q) {
  if (q.is_integer()) return std::nullopt;
  std::vector<PrimePower> factors = factorize(q.den());
  auto best = std::max_element(
      factors.begin(), factors.end(),
      [](const PrimePower& a, const PrimePower& b) { return a.value < b.value; });
  return std::move(*best);
}

std::uint64_t largest_prime_power_factor(std::uint64_t n) {
  if (n <= 1) return 1;
  std::uint64_t best = 1;
  for (PrimePower& pp : factorize(to_integer(n))) {
    best = std::max<std::uint64_t>(best, pp.value.get_ui());
  }
  return best;
}

Integer mod_inverse(const Integer& a, const Integer& p) {
  Integer x;
  if (sgn(p) <= 0 || mpz_invert(x.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw InvalidInput("no inverse of " + a.get_str() + " modulo " + p.get_str());
  }
  return x;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on signed 128-bit to stay exact for any 64-bit modulus.
  __int128 old_r = static_cast<__int128>(a % p), r = p;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw InvalidInput("no inverse of " + std::to_string(a) + " modulo " + std::to_string(p));
  }
  __int128 x = old_s % static_cast<__int128>(p);
  if (x < 0) x += p;
  return static_cast<std::uint64_t>(x);
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace ufrac
