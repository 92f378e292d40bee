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

#include "ufrac/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "ufrac/branch.hpp"
#include "ufrac/kill.hpp"

namespace ufrac {
namespace {

void check_expansion(const Branch& parent, const KillResult& result) {
  if (!parent.invariants_hold()) {
    throw std::logic_error("branch invariants broken: " + parent.debug_string());
  }
  for (const Branch& rep : result.representations) {
    if (!rep.invariants_hold() || !rep.is_representation()) {
      throw std::logic_error("bad representation branch: " + rep.debug_string());
    }
  }
  for (const Branch& child : result.pending) {
    if (!child.invariants_hold()) {
      throw std::logic_error("branch invariants broken: " + child.debug_string());
    }
    if (child.unexamined().size() >= parent.unexamined().size()) {
      throw std::logic_error("subbranch did not shrink: " + parent.debug_string() + " -> " +
                             child.debug_string());
    }
  }
}

constexpr std::uint64_t kOracleLimit = std::uint64_t{1} << 20;

}  // namespace

SearchStats for_each_representation(const DenomMultiset& d, const Rational& r,
                                    const RepresentationVisitor& visit,
                                    const SearchOptions& options) {
  if (r.sign() < 0) throw InvalidInput("target must be nonnegative, got " + r.to_string());
  SearchStats stats;
  auto report = [&] {
    if (options.progress) options.progress(stats);
  };

  Branch root = Branch::make(d, r);
  if (root.diff().sign() < 0) {
    report();
    return stats;
  }
  std::vector<Branch> stack;
  stack.push_back(root.reduce());
  while (!stack.empty()) {
    Branch br = std::move(stack.back());
    stack.pop_back();
    KillResult result = kill(br);
    ++stats.branches_expanded;
    if (options.verify_invariants) check_expansion(br, result);

    for (const Branch& rep : result.representations) {
      ++stats.representations_found;
      if (!visit(rep.representation())) {
        report();
        return stats;
      }
    }
    // The first pending branch is expanded next.
    for (auto it = result.pending.rbegin(); it != result.pending.rend(); ++it) {
      stack.push_back(std::move(*it));
    }
    stats.max_stack_depth = std::max<std::uint64_t>(stats.max_stack_depth, stack.size());
    if (options.progress && stats.branches_expanded % options.progress_interval == 0) report();
  }
  report();
  return stats;
}

std::vector<DenomMultiset> ufrac(const DenomMultiset& d, const Rational& r,
                                 const SearchOptions& options, SearchStats* stats) {
  std::vector<DenomMultiset> out;
  SearchStats s = for_each_representation(
      d, r,
      [&](const DenomMultiset& rep) {
        out.push_back(rep);
        return true;
      },
      options);
  std::sort(out.begin(), out.end(), canonical_less);
  if (options.verify_invariants) {
    for (std::size_t i = 1; i < out.size(); ++i) {
      if (!canonical_less(out[i - 1], out[i])) {
        throw std::logic_error("duplicate representation {" + out[i].to_string() + "}");
      }
    }
  }
  if (stats) *stats = s;
  return out;
}

std::optional<DenomMultiset> ufrac_early_stopping(const DenomMultiset& d, const Rational& r,
                                                  const SearchOptions& options,
                                                  SearchStats* stats) {
  std::optional<DenomMultiset> found;
  SearchStats s = for_each_representation(
      d, r,
      [&](const DenomMultiset& rep) {
        found = rep;
        return false;
      },
      options);
  if (stats) *stats = s;
  return found;
}

std::vector<DenomMultiset> brute_force_oracle(const DenomMultiset& d, const Rational& r) {
  std::uint64_t combos = 1;
  for (const auto& e : d) {
    if (e.count + 1 > kOracleLimit / combos) {
      throw ResourceLimit("brute-force oracle limited to 2^20 distinct submultisets");
    }
    combos *= e.count + 1;
  }
  std::vector<DenomMultiset> out;
  if (r.sign() < 0) return out;

  // Scale everything by L = lcm(d): a submultiset matches iff its integer
  // weight sum equals r*L.
  Integer lcm = 1;
  for (const auto& e : d) mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), e.value);
  Integer scaled = r.num() * lcm;
  if (!mpz_divisible_p(scaled.get_mpz_t(), r.den().get_mpz_t())) return out;
  mpz_divexact(scaled.get_mpz_t(), scaled.get_mpz_t(), r.den().get_mpz_t());

  const auto& entries = d.entries();
  std::vector<Integer> weights(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    mpz_divexact_ui(weights[i].get_mpz_t(), lcm.get_mpz_t(), entries[i].value);
  }
  // Odometer over count vectors.
  std::vector<std::uint64_t> counts(entries.size(), 0);
  Integer sum = 0;
  while (true) {
    if (sum == scaled) {
      std::vector<DenomMultiset::Entry> chosen;
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (counts[i] > 0) chosen.push_back({entries[i].value, counts[i]});
      }
      out.push_back(DenomMultiset::from_entries(std::move(chosen)));
    }
    std::size_t i = 0;
    while (i < entries.size() && counts[i] == entries[i].count) {
      mpz_submul_ui(sum.get_mpz_t(), weights[i].get_mpz_t(), counts[i]);
      counts[i] = 0;
      ++i;
    }
    if (i == entries.size()) break;
    ++counts[i];
    sum += weights[i];
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace ufrac
