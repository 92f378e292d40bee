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


#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "test_support.hpp"
#include "ufrac/search.hpp"

using namespace ufrac;
using namespace ufrac::testing;

namespace {

using Reps = std::vector<DenomMultiset>;

std::string serialize(const Reps& reps) {
  std::ostringstream out;
  for (const auto& r : reps) out << r.to_string() << "\n";
  return out.str();
}

}  // namespace

TEST_CASE("ufrac examples") {
  CHECK(ufrac::ufrac(ms({2, 3, 4, 12}), q("1/3")) == Reps{ms({3}), ms({4, 12})});
  CHECK(ufrac::ufrac(ms({2, 2, 3, 3, 4, 5, 6, 6, 7, 8, 12}), q("3/2")) ==
        Reps{ms({2, 2, 3, 6}), ms({2, 2, 4, 6, 12}), ms({2, 3, 3, 4, 12}), ms({2, 3, 3, 6, 6}),
             ms({2, 3, 4, 6, 6, 12})});
  CHECK(ufrac::ufrac(DenomMultiset::range(1, 10), q("3/2")) == Reps{ms({1, 2}), ms({1, 3, 6})});
  CHECK(ufrac::ufrac(ms({2, 2, 4, 4}), q("9/8")).empty());
  CHECK(ufrac::ufrac(ms({5, 6, 7}), Rational(0)) == Reps{ms({})});
  CHECK(ufrac::ufrac({}, Rational(0)) == Reps{ms({})});
  CHECK(ufrac::ufrac({}, Rational(1)).empty());
  CHECK_THROWS_AS(ufrac::ufrac(ms({2}), q("-1/2")), InvalidInput);
}

TEST_CASE("ufrac_early_stopping examples") {
  CHECK_FALSE(ufrac_early_stopping(ms({2, 2, 4, 4}), q("9/8")));
  auto one = ufrac_early_stopping(ms({2, 3, 4, 12}), q("1/3"));
  REQUIRE(one);
  CHECK((*one == ms({3}) || *one == ms({4, 12})));
  one = ufrac_early_stopping(ms({2, 3}), Rational(0));
  REQUIRE(one);
  CHECK(one->empty());
  CHECK_THROWS_AS(ufrac_early_stopping(ms({2}), q("-1")), InvalidInput);
}

TEST_CASE("brute_force_oracle examples") {
  CHECK(brute_force_oracle(ms({2, 3, 4, 12}), q("1/3")) == Reps{ms({3}), ms({4, 12})});
  CHECK(brute_force_oracle(ms({1, 1}), Rational(1)) == Reps{ms({1})});
  CHECK(brute_force_oracle({}, Rational(1)).empty());
  CHECK_THROWS_AS(brute_force_oracle(DenomMultiset::range(1, 21), Rational(1)), ResourceLimit);
}

TEST_CASE("visitor can stop the search and progress is reported") {
  std::size_t seen = 0;
  for_each_representation(DenomMultiset::range(1, 30), Rational(1), [&](const DenomMultiset& d) {
    CHECK(reciprocal_sum(d) == Rational(1));
    return ++seen < 3;
  });
  CHECK(seen == 3);

  SearchOptions opts;
  opts.progress_interval = 10;
  std::uint64_t calls = 0, last = 0;
  opts.progress = [&](const SearchStats& s) {
    ++calls;
    CHECK(s.branches_expanded >= last);
    last = s.branches_expanded;
  };
  SearchStats stats;
  const auto reps = ufrac::ufrac(DenomMultiset::range(1, 24), Rational(2), opts, &stats);
  CHECK(calls >= 2);
  CHECK(last == stats.branches_expanded);
  CHECK(stats.representations_found == reps.size());
  CHECK(stats.max_stack_depth >= 1);
}

TEST_CASE("ufrac agrees with the brute-force oracle on random instances") {
  Rng rng(61);
  SearchOptions opts;
  opts.verify_invariants = true;
  std::size_t with_solutions = 0;
  for (int i = 0; i < 10000; ++i) {
    const DenomMultiset d = random_multiset(rng, 30, 12, 3);
    const auto b = static_cast<long>(uniform(rng, 1, 60));
    const Rational r = make_rational(static_cast<long>(uniform(rng, 0, 4 * b)), b);
    const Reps expected = brute_force_oracle(d, r);
    const Reps got = ufrac::ufrac(d, r, opts);
    CHECK(got == expected);
    with_solutions += !got.empty();

    for (std::size_t k = 0; k < got.size(); ++k) {
      CHECK(reciprocal_sum(got[k]) == r);
      CHECK(d.contains(got[k]));
      if (k) CHECK(canonical_less(got[k - 1], got[k]));
    }
    const auto first = ufrac_early_stopping(d, r, opts);
    CHECK(first.has_value() == !got.empty());
    if (first) CHECK(std::binary_search(got.begin(), got.end(), *first, canonical_less));
  }
  CHECK(with_solutions > 300);
}

TEST_CASE("planted targets are always found") {
  Rng rng(67);
  SearchOptions opts;
  opts.verify_invariants = true;
  for (int i = 0; i < 10000; ++i) {
    const DenomMultiset d = random_multiset(rng, 30, 12, 3);
    const Rational r = planted_target(rng, d);
    const Reps got = ufrac::ufrac(d, r, opts);
    REQUIRE(!got.empty());
    CHECK(got == brute_force_oracle(d, r));
    CHECK(ufrac_early_stopping(d, r, opts).has_value());
  }
}

TEST_CASE("reruns are byte-identical") {
  Rng rng(71);
  for (int i = 0; i < 200; ++i) {
    const DenomMultiset d = random_multiset(rng, 60, 25, 2);
    const Rational r = make_rational(static_cast<long>(uniform(rng, 1, 60)), 30);
    CHECK(serialize(ufrac::ufrac(d, r)) == serialize(ufrac::ufrac(d, r)));
    const auto a = ufrac_early_stopping(d, r), b = ufrac_early_stopping(d, r);
    CHECK(a == b);
  }
}
