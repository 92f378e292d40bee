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

#ifndef UFRAC_APPLICATIONS_HPP
#define UFRAC_APPLICATIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ufrac/multiset.hpp"
#include "ufrac/rational.hpp"
#include "ufrac/search.hpp"

namespace ufrac {

// Dense representations: the smallest n such that some subset of {1..n}
// represents r, and the subsets achieving it.

struct GValue {
  std::uint64_t g = 0;
  /// Every witness when requested, otherwise the first one found.
  std::vector<DenomMultiset> witnesses;
  bool all_witnesses = false;
  /// True when {1..g-1} was searched (or g == 1), so g is the true minimum.
  bool minimal = false;
};

/// Smallest n with 1 + 1/2 + ... + 1/n >= r; no representation exists below.
std::uint64_t harmonic_lower_bound(const Rational& r);

/// Scans n = n_start..n_max with early stopping and returns the first n for
/// which {1..n} represents r. Requires r > 0 and 1 <= n_start <= n_max.
std::optional<GValue> compute_g(const Rational& r, std::uint64_t n_start, std::uint64_t n_max,
                                bool all_witnesses, const SearchOptions& options = {});

// Second-largest denominators of Egyptian fractions for 1. A witness for d
// has the form W + {d, c*d} with W drawn from {2..bound}, bound < d.

/// Target for the constrained search: 1 - 1/d - 1/(c*d).
Rational second_largest_target(std::uint64_t d, std::uint64_t c);

/// Up to k multipliers c in [2, c_max], ordered by the largest prime-power
/// factor of the target's denominator, ties by smaller c.
std::vector<std::uint64_t> rank_multipliers(std::uint64_t d, std::uint64_t c_max,
                                            std::size_t k);

/// The best multiplier from rank_multipliers. Requires d >= 5, c_max >= 2.
std::uint64_t choose_c(std::uint64_t d, std::uint64_t c_max);

/// First representation of 1 whose two largest denominators are d and c*d,
/// with the others at most min(bound, d - 1). Requires d >= 5, c >= 2.
std::optional<DenomMultiset> second_largest_witness(std::uint64_t d, std::uint64_t c,
                                                    std::uint64_t bound);

struct ConjectureRow {
  std::uint64_t d = 0;
  std::optional<std::uint64_t> c;
  std::optional<DenomMultiset> witness;
  std::uint64_t bound = 0;  // effective bound of the successful (or last) search

  /// "d, c, {w1, w2, ...}" or "d, -, none".
  std::string to_string() const;
};

/// For every d in [d_lo, d_hi]: try the `candidates` best multipliers in
/// rank order, each against the increasing bound schedule, and report the
/// first witness. Empty report when d_lo > d_hi.
std::vector<ConjectureRow> verify_conjecture_range(std::uint64_t d_lo, std::uint64_t d_hi,
                                                   std::uint64_t c_max,
                                                   const std::vector<std::uint64_t>& bounds,
                                                   std::size_t candidates = 10);

}  // namespace ufrac

#endif  // UFRAC_APPLICATIONS_HPP
