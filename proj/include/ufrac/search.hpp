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

#ifndef UFRAC_SEARCH_HPP
#define UFRAC_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ufrac/multiset.hpp"
#include "ufrac/rational.hpp"

namespace ufrac {

struct SearchStats {
  std::uint64_t branches_expanded = 0;
  std::uint64_t representations_found = 0;
  std::uint64_t max_stack_depth = 0;
};

struct SearchOptions {
  /// Called every `progress_interval` expansions and once at the end. Must
  /// not touch the search.
  std::function<void(const SearchStats&)> progress;
  std::uint64_t progress_interval = 100'000;
  /// Recompute every branch's cached fields and check that each pending
  /// subbranch has fewer unexamined elements than its parent. Throws
  /// std::logic_error on violation. Slow; meant for tests.
  bool verify_invariants = false;
};

/// Return false to stop the search.
using RepresentationVisitor = std::function<bool(const DenomMultiset&)>;

/// Streams every submultiset of `d` with reciprocal sum `r` to `visit`, in
/// depth-first discovery order. Throws InvalidInput for negative r.
SearchStats for_each_representation(const DenomMultiset& d, const Rational& r,
                                    const RepresentationVisitor& visit,
                                    const SearchOptions& options = {});

/// All representations of r in d, sorted by canonical_less.
std::vector<DenomMultiset> ufrac(const DenomMultiset& d, const Rational& r,
                                 const SearchOptions& options = {},
                                 SearchStats* stats = nullptr);

/// The first representation in depth-first order, or nullopt if none exists.
std::optional<DenomMultiset> ufrac_early_stopping(const DenomMultiset& d, const Rational& r,
                                                  const SearchOptions& options = {},
                                                  SearchStats* stats = nullptr);

/// Exhaustive check over all distinct submultisets; independent of the
/// branch machinery. Throws ResourceLimit when d has more than 2^20
/// distinct submultisets.
std::vector<DenomMultiset> brute_force_oracle(const DenomMultiset& d, const Rational& r);

}  // namespace ufrac

#endif  // UFRAC_SEARCH_HPP
