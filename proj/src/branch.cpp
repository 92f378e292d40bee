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

#include "ufrac/branch.hpp"

#include <algorithm>
#include <limits>

namespace ufrac {
namespace {

// Largest d with 1/d > q, i.e. d < 1/q. Every positive d qualifies when q <= 0.
Integer reciprocal_limit(const Rational& q) {
  if (q.sign() <= 0) return to_integer(std::numeric_limits<std::uint64_t>::max());
  Integer limit = q.den() - 1;
  mpz_fdiv_q(limit.get_mpz_t(), limit.get_mpz_t(), q.num().get_mpz_t());
  return limit;
}

}  // namespace

Branch Branch::make(DenomMultiset d, Rational r) {
  Branch br;
  br.diff_ = delta(d, r);
  br.d_ = std::move(d);
  br.original_r_ = r;
  br.r_ = std::move(r);
  br.refresh_gpp();
  return br;
}

Branch Branch::reserve(const DenomMultiset& e) const {
  Branch out = *this;
  out.d_ = d_.remove_submultiset(e);
  out.rsvd_ = rsvd_.merged(e);
  out.r_ -= reciprocal_sum(e);
  return out;
}

Branch Branch::remove(const DenomMultiset& e) const {
  Branch out = *this;
  out.d_ = d_.remove_submultiset(e);
  out.diff_ -= reciprocal_sum(e);
  out.refresh_gpp();
  return out;
}

DenomMultiset Branch::take_prefix(const Integer& limit) {
  auto& entries = d_.entries_;
  auto cut = entries.begin();
  if (limit.fits_ulong_p()) {
    std::uint64_t lim = limit.get_ui();
    cut = std::find_if(entries.begin(), entries.end(),
                       [lim](const DenomMultiset::Entry& e) { return e.value > lim; });
  } else if (sgn(limit) > 0) {
    cut = entries.end();
  }
  DenomMultiset prefix;
  if (cut == entries.begin()) return prefix;
  prefix.entries_.assign(entries.begin(), cut);
  for (const auto& e : prefix.entries_) prefix.size_ += e.count;
  entries.erase(entries.begin(), cut);
  d_.size_ -= prefix.size_;
  return prefix;
}

void Branch::reduce_in_place() {
  while (!d_.empty()) {
    const std::uint64_t smallest = d_.entries_.front().value;
    Integer limit = reciprocal_limit(r_);
    if (limit >= smallest) {
      DenomMultiset removed = take_prefix(limit);
      diff_ -= reciprocal_sum(removed);
      continue;
    }
    limit = reciprocal_limit(diff_);
    if (limit >= smallest) {
      DenomMultiset kept = take_prefix(limit);
      r_ -= reciprocal_sum(kept);
      rsvd_ = rsvd_.merged(kept);
      continue;
    }
    break;
  }
}

Branch Branch::reduce() const {
  Branch out = *this;
  out.reduce_in_place();
  out.refresh_gpp();
  return out;
}

Branch Branch::split_raw(DenomMultiset rest, const DenomMultiset& kept, const Rational& kept_sum,
                         const Rational& removed_sum) const {
  Branch out;
  out.d_ = std::move(rest);
  out.rsvd_ = rsvd_.merged(kept);
  out.original_r_ = original_r_;
  out.r_ = r_ - kept_sum;
  out.diff_ = diff_ - removed_sum;
  return out;
}

Branch Branch::split(DenomMultiset rest, const DenomMultiset& kept, const Rational& kept_sum,
                     const Rational& removed_sum) const {
  Branch out = split_raw(std::move(rest), kept, kept_sum, removed_sum);
  out.refresh_gpp();
  return out;
}

Branch Branch::split_and_reduce(DenomMultiset rest, const DenomMultiset& kept,
                                const Rational& kept_sum, const Rational& removed_sum) const {
  Branch out = split_raw(std::move(rest), kept, kept_sum, removed_sum);
  out.reduce_in_place();
  out.refresh_gpp();
  return out;
}

bool Branch::invariants_hold() const {
  return r_ == original_r_ - reciprocal_sum(rsvd_) && diff_ == delta(d_, r_) &&
         gpp_ == greatest_prime_power(diff_);
}

std::string Branch::debug_string() const {
  return "D={" + d_.to_string() + "} rsvd={" + rsvd_.to_string() + "} r=" + r_.to_string() +
         " original-r=" + original_r_.to_string() + " diff=" + diff_.to_string();
}

}  // namespace ufrac
