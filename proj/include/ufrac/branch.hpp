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

#ifndef UFRAC_BRANCH_HPP
#define UFRAC_BRANCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "ufrac/multiset.hpp"
#include "ufrac/number_theory.hpp"
#include "ufrac/rational.hpp"

namespace ufrac {

/// One node of the search tree.
///
/// A branch stands for every representation of its original target that
/// contains all of `reserved()` and otherwise draws only from `unexamined()`.
/// The cached fields always satisfy
///
///   target() == original_target() - R(reserved())
///   diff()   == R(unexamined()) - target()
///   gpp()    == greatest_prime_power(diff())
///
/// Branches are values: every transition returns a new branch.
class Branch {
 public:
  /// Branch with nothing reserved. Does not reduce.
  static Branch make(DenomMultiset d, Rational r);

  const DenomMultiset& unexamined() const { return d_; }
  const DenomMultiset& reserved() const { return rsvd_; }
  const Rational& original_target() const { return original_r_; }
  const Rational& target() const { return r_; }
  const Rational& diff() const { return diff_; }
  const std::optional<PrimePower>& gpp() const { return gpp_; }

  /// Moves `e` from the unexamined set to the reserved set: target drops by
  /// R(e), diff is unchanged. Throws InvalidInput unless e is contained.
  Branch reserve(const DenomMultiset& e) const;
  /// Drops `e` from the unexamined set: diff drops by R(e), target is
  /// unchanged. Throws InvalidInput unless e is contained.
  Branch remove(const DenomMultiset& e) const;

  /// Applies the forced moves until neither fires: remove every d with
  /// 1/d > target, otherwise reserve every d with 1/d > diff. The fixpoint
  /// may be dead (negative target or diff).
  Branch reduce() const;

  /// Subbranch after deciding every multiple of some prime power at once:
  /// the unexamined set becomes `rest`, `kept` is reserved (its reciprocal
  /// sum is `kept_sum`) and the removed multiples lower diff by
  /// `removed_sum`. `rest` + kept + removed must equal unexamined(); the sums
  /// are passed in so callers can derive them from precomputed weights.
  Branch split(DenomMultiset rest, const DenomMultiset& kept, const Rational& kept_sum,
               const Rational& removed_sum) const;
  /// split() followed by reduce(), computing gpp only once.
  Branch split_and_reduce(DenomMultiset rest, const DenomMultiset& kept,
                          const Rational& kept_sum, const Rational& removed_sum) const;

  bool is_representation() const { return diff_.is_zero() && r_.sign() >= 0; }
  bool is_dead() const { return diff_.sign() < 0 || r_.sign() < 0; }

  /// reserved() + unexamined(); for a representation branch this is the
  /// submultiset it represents.
  DenomMultiset representation() const { return rsvd_.merged(d_); }

  /// Recomputes every cached field from scratch and compares.
  bool invariants_hold() const;

  /// "D={...} rsvd={...} r=... original-r=... diff=..."
  std::string debug_string() const;

 private:
  Branch() = default;

  Branch split_raw(DenomMultiset rest, const DenomMultiset& kept, const Rational& kept_sum,
                   const Rational& removed_sum) const;
  void reduce_in_place();
  /// Splits off the entries with value <= limit.
  DenomMultiset take_prefix(const Integer& limit);
  void refresh_gpp() { gpp_ = greatest_prime_power(diff_); }

  DenomMultiset d_;
  DenomMultiset rsvd_;
  Rational original_r_;
  Rational r_;
  Rational diff_;
  std::optional<PrimePower> gpp_;
};

/// Output of one KILL step.
struct KillResult {
  std::vector<Branch> representations;
  std::vector<Branch> pending;
};

}  // namespace ufrac

#endif  // UFRAC_BRANCH_HPP
