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

#include "ufrac/multiset.hpp"

#include <algorithm>
#include <map>

namespace ufrac {

DenomMultiset DenomMultiset::from_elements(std::span<const std::int64_t> elements) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::int64_t e : elements) {
    if (e <= 0) {
      throw InvalidInput("multiset elements must be positive, got " + std::to_string(e));
    }
    ++counts[static_cast<std::uint64_t>(e)];
  }
  DenomMultiset out;
  out.entries_.reserve(counts.size());
  for (auto [v, c] : counts) {
    out.entries_.push_back({v, c});
    out.size_ += c;
  }
  return out;
}

DenomMultiset DenomMultiset::from_elements(std::initializer_list<std::int64_t> elements) {
  return from_elements(std::span<const std::int64_t>(elements.begin(), elements.size()));
}

DenomMultiset DenomMultiset::range(std::uint64_t lo, std::uint64_t hi) {
  if (lo == 0) throw InvalidInput("range must start at 1 or above");
  DenomMultiset out;
  if (lo > hi) return out;
  out.entries_.reserve(hi - lo + 1);
  for (std::uint64_t v = lo; v <= hi; ++v) out.entries_.push_back({v, 1});
  out.size_ = hi - lo + 1;
  return out;
}

DenomMultiset DenomMultiset::from_entries(std::vector<Entry> entries) {
  DenomMultiset out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].value == 0 || entries[i].count == 0 ||
        (i > 0 && entries[i - 1].value >= entries[i].value)) {
      throw InvalidInput("multiset entries must be positive and strictly ascending");
    }
    out.size_ += entries[i].count;
  }
  out.entries_ = std::move(entries);
  return out;
}

std::uint64_t DenomMultiset::count(std::uint64_t value) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), value,
                             [](const Entry& e, std::uint64_t v) { return e.value < v; });
  return (it != entries_.end() && it->value == value) ? it->count : 0;
}

std::uint64_t DenomMultiset::min_element() const {
  if (entries_.empty()) throw InvalidInput("min_element of an empty multiset");
  return entries_.front().value;
}

std::uint64_t DenomMultiset::max_element() const {
  if (entries_.empty()) throw InvalidInput("max_element of an empty multiset");
  return entries_.back().value;
}

bool DenomMultiset::contains(const DenomMultiset& sub) const {
  auto it = entries_.begin();
  for (const Entry& e : sub.entries_) {
    while (it != entries_.end() && it->value < e.value) ++it;
    if (it == entries_.end() || it->value != e.value || it->count < e.count) return false;
  }
  return true;
}

DenomMultiset DenomMultiset::remove_submultiset(const DenomMultiset& sub) const {
  if (!contains(sub)) {
    throw InvalidInput("cannot remove {" + sub.to_string() + "} from {" + to_string() + "}");
  }
  DenomMultiset out;
  out.entries_.reserve(entries_.size());
  auto it = sub.entries_.begin();
  for (const Entry& e : entries_) {
    if (it != sub.entries_.end() && it->value == e.value) {
      if (it->count < e.count) out.entries_.push_back({e.value, e.count - it->count});
      ++it;
    } else {
      out.entries_.push_back(e);
    }
  }
  out.size_ = size_ - sub.size_;
  return out;
}

DenomMultiset DenomMultiset::merged(const DenomMultiset& other) const {
  DenomMultiset out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->value < b->value)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->value < a->value) {
      out.entries_.push_back(*b++);
    } else {
      out.entries_.push_back({a->value, a->count + b->count});
      ++a;
      ++b;
    }
  }
  out.size_ = size_ + other.size_;
  return out;
}

DenomMultiset DenomMultiset::with_added(std::uint64_t value, std::uint64_t count) const {
  if (count == 0) return *this;
  return merged(from_entries({{value, count}}));
}

unsigned DenomMultiset::max_power_dividing(const Integer& p) const {
  if (!fits_u64(p) || p < 2) return 0;
  std::uint64_t prime = to_u64(p);
  unsigned best = 0;
  for (const Entry& e : entries_) best = std::max(best, valuation(e.value, prime));
  return best;
}

std::pair<DenomMultiset, DenomMultiset> DenomMultiset::partition_multiples(const Integer& q) const {
  if (!fits_u64(q) || q < 1) return {DenomMultiset{}, *this};
  std::uint64_t m = to_u64(q);
  DenomMultiset multiples, rest;
  for (const Entry& e : entries_) {
    DenomMultiset& dst = (e.value % m == 0) ? multiples : rest;
    dst.entries_.push_back(e);
    dst.size_ += e.count;
  }
  return {std::move(multiples), std::move(rest)};
}

std::vector<std::uint64_t> DenomMultiset::elements() const {
  std::vector<std::uint64_t> out;
  out.reserve(size_);
  for (const Entry& e : entries_) out.insert(out.end(), e.count, e.value);
  return out;
}

std::string DenomMultiset::to_string() const {
  std::string out;
  for (const Entry& e : entries_) {
    for (std::uint64_t i = 0; i < e.count; ++i) {
      if (!out.empty()) out += ' ';
      out += std::to_string(e.value);
    }
  }
  return out;
}

bool canonical_less(const DenomMultiset& a, const DenomMultiset& b) {
  // Walk both run-length encodings as if expanded.
  auto ia = a.begin(), ib = b.begin();
  std::uint64_t ua = 0, ub = 0;  // copies of the current entry already consumed
  while (ia != a.end() && ib != b.end()) {
    if (ia->value != ib->value) return ia->value < ib->value;
    std::uint64_t step = std::min(ia->count - ua, ib->count - ub);
    ua += step;
    ub += step;
    if (ua == ia->count) {
      ++ia;
      ua = 0;
    }
    if (ub == ib->count) {
      ++ib;
      ub = 0;
    }
  }
  return ia == a.end() && ib != b.end();
}

Rational reciprocal_sum(const DenomMultiset& d) {
  if (d.empty()) return Rational{};
  if (d.distinct_size() == 1) {
    const auto& e = d.entries().front();
    return Rational::make(to_integer(e.count), to_integer(e.value));
  }
  Integer lcm = 1;
  for (const auto& e : d) mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), e.value);
  Integer num = 0, term;
  for (const auto& e : d) {
    mpz_divexact_ui(term.get_mpz_t(), lcm.get_mpz_t(), e.value);
    if (e.count == 1) {
      num += term;
    } else {
      mpz_addmul_ui(num.get_mpz_t(), term.get_mpz_t(), e.count);
    }
  }
  return Rational::make(num, lcm);
}

Rational delta(const DenomMultiset& d, const Rational& r) { return reciprocal_sum(d) - r; }

}  // namespace ufrac
