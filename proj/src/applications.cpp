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

#include "ufrac/applications.hpp"

#include <algorithm>
#include <numeric>

#include "ufrac/number_theory.hpp"

namespace ufrac {

std::uint64_t harmonic_lower_bound(const Rational& r) {
  Rational sum;
  std::uint64_t n = 0;
  while (sum < r) sum += unit_fraction(++n);
  return std::max<std::uint64_t>(n, 1);
}

std::optional<GValue> compute_g(const Rational& r, std::uint64_t n_start, std::uint64_t n_max,
                                bool all_witnesses, const SearchOptions& options) {
  if (r.sign() <= 0) throw InvalidInput("G(r) needs r > 0");
  if (n_start < 1 || n_start > n_max) {
    throw InvalidInput("invalid range [" + std::to_string(n_start) + ", " +
                       std::to_string(n_max) + "]");
  }
  for (std::uint64_t n = n_start; n <= n_max; ++n) {
    const DenomMultiset pool = DenomMultiset::range(1, n);
    std::optional<DenomMultiset> first = ufrac_early_stopping(pool, r, options);
    if (!first) continue;
    GValue out;
    out.g = n;
    out.minimal = (n == 1 || n > n_start);
    out.all_witnesses = all_witnesses;
    if (all_witnesses) {
      out.witnesses = ufrac(pool, r, options);
    } else {
      out.witnesses.push_back(std::move(*first));
    }
    return out;
  }
  return std::nullopt;
}

Rational second_largest_target(std::uint64_t d, std::uint64_t c) {
  return Rational(1) - unit_fraction(d) - unit_fraction(c * d);
}

std::vector<std::uint64_t> rank_multipliers(std::uint64_t d, std::uint64_t c_max,
                                            std::size_t k) {
  if (d < 5 || c_max < 2) throw InvalidInput("need d >= 5 and c_max >= 2");
  struct Scored {
    std::uint64_t score;
    std::uint64_t c;
  };
  std::vector<Scored> scored;
  scored.reserve(c_max - 1);
  for (std::uint64_t c = 2; c <= c_max; ++c) {
    // 1 - 1/d - 1/(cd) = (cd - c - 1) / (cd)
    const std::uint64_t den = c * d;
    const std::uint64_t reduced = den / std::gcd(den - c - 1, den);
    scored.push_back({largest_prime_power_factor(reduced), c});
  }
  const std::size_t keep = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + keep, scored.end(),
                    [](const Scored& a, const Scored& b) {
                      return a.score != b.score ? a.score < b.score : a.c < b.c;
                    });
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < keep; ++i) out.push_back(scored[i].c);
  return out;
}

std::uint64_t choose_c(std::uint64_t d, std::uint64_t c_max) {
  return rank_multipliers(d, c_max, 1).front();
}

std::optional<DenomMultiset> second_largest_witness(std::uint64_t d, std::uint64_t c,
                                                    std::uint64_t bound) {
  if (d < 5) throw InvalidInput("second-largest witness needs d >= 5");
  if (c < 2) throw InvalidInput("largest denominator c*d must exceed d");
  const std::uint64_t limit = std::min(bound, d - 1);
  std::optional<DenomMultiset> found =
      ufrac_early_stopping(DenomMultiset::range(2, limit), second_largest_target(d, c));
  if (!found) return std::nullopt;
  return found->with_added(d).with_added(c * d);
}

std::string ConjectureRow::to_string() const {
  std::string out = std::to_string(d) + ", ";
  if (!c || !witness) return out + "-, none";
  out += std::to_string(*c) + ", {";
  bool first = true;
  for (std::uint64_t v : witness->elements()) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::vector<ConjectureRow> verify_conjecture_range(std::uint64_t d_lo, std::uint64_t d_hi,
                                                   std::uint64_t c_max,
                                                   const std::vector<std::uint64_t>& bounds,
                                                   std::size_t candidates) {
  std::vector<ConjectureRow> report;
  if (d_lo > d_hi) return report;
  if (d_lo < 5) throw InvalidInput("second-largest denominators start at d = 5");
  if (bounds.empty()) throw InvalidInput("bound schedule is empty");
  for (std::uint64_t d = d_lo; d <= d_hi; ++d) {
    ConjectureRow row;
    row.d = d;
    // Bounds past d - 1 all collapse to the same search.
    std::vector<std::uint64_t> effective;
    for (std::uint64_t b : bounds) {
      const std::uint64_t e = std::min(b, d - 1);
      if (effective.empty() || e > effective.back()) effective.push_back(e);
    }
    for (std::uint64_t c : rank_multipliers(d, c_max, candidates)) {
      for (std::uint64_t b : effective) {
        row.bound = b;
        if (auto w = second_largest_witness(d, c, b)) {
          row.c = c;
          row.witness = std::move(w);
          break;
        }
      }
      if (row.witness) break;
    }
    report.push_back(std::move(row));
  }
  return report;
}

}  // namespace ufrac
