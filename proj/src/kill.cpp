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

#include "ufrac/kill.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ufrac {
namespace {

// Residue tables cost p bytes per distinct value; beyond this we only check
// the residue at the leaves.
constexpr std::uint64_t kMaxResidueTable = std::uint64_t{1} << 24;

// Depth-first enumeration of removal count vectors over the multiples of
// p^s. Values are visited largest first, counts ascending. Two prunes:
//  - residue: a suffix table of reachable inverse sums mod p;
//  - weight (optional): removed weight X = sum count*L/value must stay in
//    [lo, hi], which encodes R(removed) <= diff and R(kept) <= r exactly.
class RemovalEnumerator {
 public:
  struct Slot {
    std::uint64_t value;
    std::uint64_t count;
    std::uint64_t inverse;  // c^{-1} mod p, value = c * p^s
    Integer weight;         // lcm / value
  };

  RemovalEnumerator(const DenomMultiset& multiples, const CongruenceTarget& target) {
    if (!fits_u64(target.prime)) throw std::logic_error("prime exceeds 64 bits");
    p_ = to_u64(target.prime);
    aim_ = to_u64(target.aim);
    const Integer ps = target.prime_power_s();
    if (!fits_u64(ps)) throw std::logic_error("p^s exceeds 64 bits");
    const std::uint64_t pps = to_u64(ps);

    for (const auto& e : multiples) mpz_lcm_ui(lcm_.get_mpz_t(), lcm_.get_mpz_t(), e.value);
    const auto& entries = multiples.entries();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
      if (it->value % pps != 0 || (it->value / pps) % p_ == 0) {
        throw std::logic_error("element " + std::to_string(it->value) +
                               " is not c*p^s with p not dividing c");
      }
      Slot slot{it->value, it->count, mod_inverse((it->value / pps) % p_, p_), Integer()};
      mpz_divexact_ui(slot.weight.get_mpz_t(), lcm_.get_mpz_t(), it->value);
      slots_.push_back(std::move(slot));
    }

    const std::size_t k = slots_.size();
    suffix_weight_.assign(k + 1, Integer(0));
    for (std::size_t i = k; i-- > 0;) {
      suffix_weight_[i] = suffix_weight_[i + 1] + slots_[i].weight * slots_[i].count;
    }
    if (p_ * (k + 1) <= kMaxResidueTable) build_reach();
    partial_.assign(k + 1, Integer(0));
    counts_.assign(k, 0);
  }

  const Integer& lcm() const { return lcm_; }
  const Integer& total_weight() const { return suffix_weight_[0]; }
  const std::vector<Slot>& slots() const { return slots_; }

  void set_weight_bounds(Integer lo, Integer hi) {
    bounded_ = true;
    lo_ = std::move(lo);
    hi_ = std::move(hi);
  }

  /// visit(counts, removed_weight); counts are indexed like slots().
  void run(const std::function<void(const std::vector<std::uint64_t>&, const Integer&)>& visit) {
    visit_ = &visit;
    descend(0, 0);
  }

 private:
  void build_reach() {
    const std::size_t k = slots_.size();
    reach_.assign(k + 1, std::vector<char>(p_, 0));
    reach_[k][0] = 1;
    for (std::size_t i = k; i-- > 0;) {
      const auto& next = reach_[i + 1];
      auto& cur = reach_[i];
      const std::uint64_t copies = std::min<std::uint64_t>(slots_[i].count, p_ - 1);
      for (std::uint64_t res = 0; res < p_; ++res) {
        if (!next[res]) continue;
        std::uint64_t shifted = res;
        for (std::uint64_t c = 0; c <= copies; ++c) {
          cur[shifted] = 1;
          shifted = (shifted + slots_[i].inverse) % p_;
        }
      }
    }
  }

  void descend(std::size_t i, std::uint64_t residue) {
    const Integer& x = partial_[i];
    if (bounded_ && (x > hi_ || x + suffix_weight_[i] < lo_)) return;
    if (i == slots_.size()) {
      if (residue == aim_) (*visit_)(counts_, x);
      return;
    }
    if (!reach_.empty() && !reach_[i][(aim_ + p_ - residue) % p_]) return;
    const Slot& slot = slots_[i];
    Integer& next = partial_[i + 1];
    next = x;
    for (std::uint64_t c = 0; c <= slot.count; ++c) {
      if (c > 0) {
        next += slot.weight;
        residue = (residue + slot.inverse) % p_;
        if (bounded_ && next > hi_) break;
      }
      counts_[i] = c;
      descend(i + 1, residue);
    }
    counts_[i] = 0;
  }

  std::uint64_t p_ = 0;
  std::uint64_t aim_ = 0;
  Integer lcm_ = 1;
  std::vector<Slot> slots_;
  std::vector<Integer> suffix_weight_;
  std::vector<std::vector<char>> reach_;
  std::vector<Integer> partial_;
  std::vector<std::uint64_t> counts_;
  bool bounded_ = false;
  Integer lo_, hi_;
  const std::function<void(const std::vector<std::uint64_t>&, const Integer&)>* visit_ = nullptr;
};

// (removed, kept) multisets in ascending order for one count vector.
std::pair<DenomMultiset, DenomMultiset> materialize(const RemovalEnumerator& en,
                                                    const std::vector<std::uint64_t>& counts) {
  std::vector<DenomMultiset::Entry> removed, kept;
  const auto& slots = en.slots();
  for (std::size_t i = slots.size(); i-- > 0;) {
    const auto& slot = slots[i];
    if (counts[i] > 0) removed.push_back({slot.value, counts[i]});
    if (counts[i] < slot.count) kept.push_back({slot.value, slot.count - counts[i]});
  }
  return {DenomMultiset::from_entries(std::move(removed)),
          DenomMultiset::from_entries(std::move(kept))};
}

Integer floor_times(const Rational& q, const Integer& scale) {
  Integer out = q.num() * scale;
  mpz_fdiv_q(out.get_mpz_t(), out.get_mpz_t(), q.den().get_mpz_t());
  return out;
}

}  // namespace

Integer CongruenceTarget::prime_power_s() const {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), prime.get_mpz_t(), s);
  return out;
}

PreAim compute_pre_aim(const Branch& br) {
  const auto& gpp = br.gpp();
  if (!gpp || br.diff().sign() <= 0) {
    throw std::logic_error("compute_pre_aim needs a positive non-integer diff");
  }
  const unsigned s = br.unexamined().max_power_dividing(gpp->prime);
  const unsigned t = gpp->exponent;
  if (s < t) return std::nullopt;

  CongruenceTarget target{gpp->prime, s, t, Integer()};
  const Integer& p = gpp->prime;
  Integer lift;
  mpz_pow_ui(lift.get_mpz_t(), p.get_mpz_t(), s - t);
  Integer m = br.diff().num() * lift;
  Integer n = br.diff().den() / gpp->value;
  Integer aim = m * mod_inverse(Integer(n % p), p);
  mpz_mod(aim.get_mpz_t(), aim.get_mpz_t(), p.get_mpz_t());
  target.aim = std::move(aim);
  return target;
}

std::vector<DenomMultiset> generate_subsets_aim(const DenomMultiset& multiples,
                                                const CongruenceTarget& target) {
  RemovalEnumerator en(multiples, target);
  std::vector<DenomMultiset> out;
  en.run([&](const std::vector<std::uint64_t>& counts, const Integer&) {
    out.push_back(materialize(en, counts).first);
  });
  return out;
}

std::vector<Branch> split_on_prime_power(const Branch& br) {
  std::vector<Branch> out;
  PreAim pre = compute_pre_aim(br);
  if (!pre) return out;
  auto [multiples, rest] = br.unexamined().partition_multiples(pre->prime_power_s());
  RemovalEnumerator en(multiples, *pre);
  en.run([&](const std::vector<std::uint64_t>& counts, const Integer& removed_weight) {
    auto [removed, kept] = materialize(en, counts);
    out.push_back(br.split(rest, kept,
                           Rational::make(en.total_weight() - removed_weight, en.lcm()),
                           Rational::make(removed_weight, en.lcm())));
  });
  return out;
}

KillResult kill_when_diff_is_not_integer(const Branch& br) {
  KillResult out;
  PreAim pre = compute_pre_aim(br);
  if (!pre) return out;
  auto [multiples, rest] = br.unexamined().partition_multiples(pre->prime_power_s());
  RemovalEnumerator en(multiples, *pre);
  // A subbranch survives only if R(removed) <= diff and R(kept) <= r.
  en.set_weight_bounds(en.total_weight() - floor_times(br.target(), en.lcm()),
                       floor_times(br.diff(), en.lcm()));
  en.run([&](const std::vector<std::uint64_t>& counts, const Integer& removed_weight) {
    auto [removed, kept] = materialize(en, counts);
    Branch sub = br.split_and_reduce(rest, kept,
                                     Rational::make(en.total_weight() - removed_weight, en.lcm()),
                                     Rational::make(removed_weight, en.lcm()));
    if (sub.is_dead()) return;
    if (sub.diff().is_zero()) {
      out.representations.push_back(std::move(sub));
    } else {
      out.pending.push_back(std::move(sub));
    }
  });
  return out;
}

KillResult kill_when_diff_is_integer(const Branch& br) {
  const auto& d = br.unexamined();
  const std::uint64_t smallest = d.min_element();
  const Rational share = unit_fraction(smallest);

  KillResult out;
  Branch remove_all = br.remove(DenomMultiset::from_entries({{smallest, d.count(smallest)}})).reduce();
  if (br.target() < share) {
    out.pending.push_back(std::move(remove_all));
    return out;
  }
  // Reserving a single copy leaves the other copies to later steps, so the
  // two subbranches split on "no copy of l" versus "at least one copy".
  Branch reserve_one = br.reserve(DenomMultiset::from_entries({{smallest, 1}})).reduce();
  if (br.target() == share) {
    out.representations.push_back(std::move(reserve_one));
  } else {
    out.pending.push_back(std::move(reserve_one));
  }
  out.pending.push_back(std::move(remove_all));
  return out;
}

KillResult kill(const Branch& br) {
  if (br.diff().is_zero()) return KillResult{{br}, {}};
  if (br.is_dead()) return {};
  if (br.diff().is_integer()) return kill_when_diff_is_integer(br);
  return kill_when_diff_is_not_integer(br);
}

}  // namespace ufrac
