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

#ifndef UFRAC_MULTISET_HPP
#define UFRAC_MULTISET_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ufrac/number_theory.hpp"
#include "ufrac/rational.hpp"

namespace ufrac {

/// A finite multiset of positive integers stored as (value, multiplicity)
/// pairs sorted by value. Iteration is always ascending.
class DenomMultiset {
 public:
  struct Entry {
    std::uint64_t value;
    std::uint64_t count;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  DenomMultiset() = default;

  /// Throws InvalidInput on any element <= 0.
  static DenomMultiset from_elements(std::span<const std::int64_t> elements);
  static DenomMultiset from_elements(std::initializer_list<std::int64_t> elements);
  /// {lo, lo+1, ..., hi}; empty when lo > hi. lo must be >= 1.
  static DenomMultiset range(std::uint64_t lo, std::uint64_t hi);
  /// Entries must be strictly ascending by value with nonzero counts.
  static DenomMultiset from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool empty() const { return entries_.empty(); }
  /// Total element count, with multiplicity.
  std::uint64_t size() const { return size_; }
  std::size_t distinct_size() const { return entries_.size(); }
  std::uint64_t count(std::uint64_t value) const;

  /// Throws InvalidInput when empty.
  std::uint64_t min_element() const;
  std::uint64_t max_element() const;

  bool contains(const DenomMultiset& sub) const;

  /// Multiplicities subtract. Throws InvalidInput unless sub is contained.
  DenomMultiset remove_submultiset(const DenomMultiset& sub) const;
  /// Multiplicities add.
  DenomMultiset merged(const DenomMultiset& other) const;
  DenomMultiset with_added(std::uint64_t value, std::uint64_t count = 1) const;

  /// Largest s with p^s dividing some element; 0 if none is divisible by p.
  unsigned max_power_dividing(const Integer& p) const;

  /// (multiples of q, the rest). Both keep ascending order.
  std::pair<DenomMultiset, DenomMultiset> partition_multiples(const Integer& q) const;

  /// Elements repeated per multiplicity, ascending.
  std::vector<std::uint64_t> elements() const;

  /// "2 2 3 6"; empty string for the empty multiset.
  std::string to_string() const;

  friend bool operator==(const DenomMultiset&, const DenomMultiset&) = default;

 private:
  friend class Branch;

  std::vector<Entry> entries_;
  std::uint64_t size_ = 0;
};

/// Canonical order: lexicographic on the ascending element sequences.
bool canonical_less(const DenomMultiset& a, const DenomMultiset& b);

/// Sum of 1/d over D with multiplicity; 0 for the empty multiset.
Rational reciprocal_sum(const DenomMultiset& d);

/// reciprocal_sum(d) - r.
Rational delta(const DenomMultiset& d, const Rational& r);

}  // namespace ufrac

#endif  // UFRAC_MULTISET_HPP
