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

#ifndef UFRAC_NUMBER_THEORY_HPP
#define UFRAC_NUMBER_THEORY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ufrac/rational.hpp"

namespace ufrac {

/// A full prime-power factor p^exponent of some integer.
struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
  Integer value;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Primes below 10^6, ascending. Built once on first use.
std::span<const std::uint32_t> small_primes();

bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

/// Factorization of |n| into prime powers, ascending by prime. n = 0 throws.
std::vector<PrimePower> factorize(const Integer& n);

/// Largest prime-power factor (by value) of the denominator of q, or nullopt
/// when q is an integer.
std::optional<PrimePower> greatest_prime_power(const Rational& q);

/// Largest prime-power factor of a u64 (1 for n == 1).
std::uint64_t largest_prime_power_factor(std::uint64_t n);

/// x in [1, p-1] with a*x = 1 mod p. Throws InvalidInput when p | a.
Integer mod_inverse(const Integer& a, const Integer& p);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

/// Multiplicity of the prime p in n (n != 0).
unsigned valuation(std::uint64_t n, std::uint64_t p);

}  // namespace ufrac

#endif  // UFRAC_NUMBER_THEORY_HPP
