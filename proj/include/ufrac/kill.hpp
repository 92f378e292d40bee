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

#ifndef UFRAC_KILL_HPP
#define UFRAC_KILL_HPP

#include <optional>
#include <vector>

#include "ufrac/branch.hpp"
#include "ufrac/multiset.hpp"

namespace ufrac {

/// Residue condition that a set of removed multiples of p^s must meet so
/// that p^s leaves the denominator of diff. Writing each multiple as c*p^s,
/// the removed c's must have inverses summing to `aim` modulo p.
struct CongruenceTarget {
  Integer prime;
  unsigned s = 0;  // p^s: highest power of p dividing an unexamined element
  unsigned t = 0;  // p^t: the branch's gpp
  Integer aim;     // in [0, p)

  Integer prime_power_s() const;

  friend bool operator==(const CongruenceTarget&, const CongruenceTarget&) = default;
};

/// nullopt means no submultiset can clear p^t from the denominator (t > s),
/// so the branch has no representations.
using PreAim = std::optional<CongruenceTarget>;

/// Requires diff > 0 and not an integer.
PreAim compute_pre_aim(const Branch& br);

/// Every distinct submultiset of `multiples` whose c-inverses sum to
/// target.aim mod p. Each element must be c*p^s with p not dividing c,
/// otherwise std::logic_error. Output order is lexicographic in the count
/// vectors read from the largest value down.
std::vector<DenomMultiset> generate_subsets_aim(const DenomMultiset& multiples,
                                                const CongruenceTarget& target);

/// The raw subbranches of a non-integer branch, one per removal set from
/// generate_subsets_aim: the set is removed, the other multiples of p^s are
/// reserved. Not reduced and not filtered. Empty when unsolvable.
std::vector<Branch> split_on_prime_power(const Branch& br);

KillResult kill(const Branch& br);
KillResult kill_when_diff_is_integer(const Branch& br);
KillResult kill_when_diff_is_not_integer(const Branch& br);

}  // namespace ufrac

#endif  // UFRAC_KILL_HPP
