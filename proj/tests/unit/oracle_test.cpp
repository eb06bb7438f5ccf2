// Copyright 2026 The tokswap Authors
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

#include <gtest/gtest.h>

#include "../support/reference.hpp"
#include "tokswap/error.hpp"
#include "tokswap/lollipop.hpp"
#include "tokswap/oracle.hpp"
#include "tokswap/permutation_rank.hpp"
#include "tokswap/verify.hpp"

namespace tokswap {
namespace {

Graph square() { return Graph(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}}); }

TEST(Square, Reversal) {
  const Graph g = square();
  const Configuration f({3, 2, 1, 0});
  EXPECT_EQ(orbits(f).size(), 2u);
  const SwapSequence seq{{2, 3}, {0, 2}, {1, 3}, {2, 3}};
  EXPECT_TRUE(apply_swaps(g, f, seq).is_identity());
  const SwapSequence cut(seq.begin(), seq.end() - 1);
  EXPECT_EQ(verify_swaps(g, f, cut).message, "final configuration not identity");
  EXPECT_TRUE(verify_parallel(g, f, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}}).ok);
  EXPECT_EQ(ts_oracle(g, f).length, 4);
  EXPECT_EQ(rt_oracle(g, f).length, 2);
}

TEST(TsOracle, Basics) {
  EXPECT_EQ(ts_oracle(make_path(4), Configuration::identity(4)).length, 0);
  // L_{2,1}: tokens of signed vertices -1 and 1 exchanged
  const Graph l = make_lollipop(2, 1);
  const Configuration f({0, 3, 2, 1});
  EXPECT_EQ(ts_oracle(l, f).length, 3);
  EXPECT_EQ(ref::ts_distance(l, f.tokens()), 3);
  EXPECT_EQ(phi(l, f), 3);
}

TEST(TsOracle, MatchesReferenceBfs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 6;
    const Graph g = ref::random_connected(n, 0.3, rng);
    const Configuration f(ref::random_permutation(n, rng));
    const TsResult r = ts_oracle(g, f);
    EXPECT_EQ(r.length, ref::ts_distance(g, f.tokens()));
    EXPECT_EQ(static_cast<int>(r.witness.size()), r.length);
    EXPECT_TRUE(verify_swaps(g, f, r.witness).ok);
  }
}

TEST(RtOracle, MatchesReferenceBfsAndBounds) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 6;
    const Graph g = ref::random_connected(n, 0.35, rng);
    const Configuration f(ref::random_permutation(n, rng));
    const RtResult r = rt_oracle(g, f);
    EXPECT_EQ(r.length, ref::rt_distance(g, f.tokens()));
    EXPECT_TRUE(verify_parallel(g, f, r.witness).ok);
    const int ts = ts_oracle(g, f).length;
    EXPECT_LE(r.length, ts);
    EXPECT_LE(ts, r.length * (n / 2));
    EXPECT_LE(ts, n * (n - 1) / 2);
  }
}

TEST(RtOracle, Endpoints) {
  for (int n : {4, 5}) {
    std::vector<Token> t(n);
    for (int v = 0; v < n; ++v) t[v] = v;
    std::swap(t.front(), t.back());
    EXPECT_EQ(rt_oracle(make_path(n), Configuration(t)).length, n % 2 ? n : n - 1);
  }
  EXPECT_EQ(rt_oracle(make_path(3), Configuration::identity(3)).length, 0);
}

TEST(RtOracle, Bounded) {
  const Graph g = make_path(5);
  const Configuration f({4, 1, 2, 3, 0});
  EXPECT_FALSE(rt_oracle_bounded(g, f, 4).has_value());
  const auto r = rt_oracle_bounded(g, f, 5);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->length, 5);
}

TEST(RtOracle, ThreadsGiveSameAnswer) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = ref::random_connected(7, 0.3, rng);
    const Configuration f(ref::random_permutation(7, rng));
    const RtResult a = rt_oracle(g, f, {10'000'000, 1});
    const RtResult b = rt_oracle(g, f, {10'000'000, 4});
    EXPECT_EQ(a.length, b.length);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(ts_oracle(g, f, {10'000'000, 1}).witness,
              ts_oracle(g, f, {10'000'000, 4}).witness);
  }
}

TEST(Oracle, NodeCapThrows) {
  const Graph g = make_path(8);
  const Configuration f({7, 6, 5, 4, 3, 2, 1, 0});
  EXPECT_THROW(ts_oracle(g, f, {100, 1}), BudgetExceeded);
  EXPECT_THROW(rt_oracle(g, f, {100, 1}), BudgetExceeded);
}

TEST(ColoredOracle, Examples) {
  const Graph p2 = make_path(2), p3 = make_path(3);
  EXPECT_EQ(rt_colored_oracle(p3, Coloring({1, 2, 1}), Coloring({1, 2, 1})).length, 0);
  EXPECT_EQ(rt_colored_oracle(p2, Coloring({1, 2}), Coloring({2, 1})).length, 1);
  const RtResult r = rt_colored_oracle(p3, Coloring({2, 1, 1}), Coloring({1, 1, 2}));
  EXPECT_EQ(r.length, 2);
  EXPECT_TRUE(verify_colored(p3, Coloring({2, 1, 1}), Coloring({1, 1, 2}), r.witness).ok);
  EXPECT_THROW(rt_colored_oracle(p3, Coloring({2, 1, 1}), Coloring({2, 2, 1})),
               InputError);
}

TEST(ColoredOracle, MatchesReferenceBfs) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 6;
    const Graph g = ref::random_connected(n, 0.3, rng);
    std::vector<int> f(n);
    for (int v = 0; v < n; ++v) f[v] = 1 + static_cast<int>(rng() % 3);
    std::vector<int> goal = f;
    std::shuffle(goal.begin(), goal.end(), rng);
    const RtResult r = rt_colored_oracle(g, Coloring(f), Coloring(goal));
    EXPECT_EQ(r.length, ref::rt_colored_distance(g, f, goal));
    EXPECT_TRUE(verify_colored(g, Coloring(f), Coloring(goal), r.witness).ok);
  }
}

TEST(CountTwoStep, MatchesEnumeration) {
  EXPECT_EQ(count_two_step(make_path(2), Configuration::identity(2)), 2u);
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 5;
    const Graph g = ref::random_connected(n, 0.4, rng);
    const Configuration f(ref::random_permutation(n, rng));
    EXPECT_EQ(count_two_step(g, f), ref::count_two_step(g, f.tokens()));
  }
}

TEST(CountTwoStep, SolutionsListedAreSolutions) {
  const Graph g = square();
  const Configuration f({3, 2, 1, 0});
  const auto sols = two_step_solutions(g, f);
  EXPECT_EQ(sols.size(), count_two_step(g, f));
  for (const auto& [s, t] : sols) EXPECT_TRUE(verify_parallel(g, f, {s, t}).ok);
}

TEST(AllMatchings, CountsOnSmallGraphs) {
  // matchings of P_4 including the empty one: {}, 3 singles, {01,23}
  EXPECT_EQ(all_matchings(make_path(4), true).size(), 5u);
  EXPECT_EQ(all_matchings(make_path(4), false).size(), 4u);
  EXPECT_EQ(all_matchings(make_complete(4), false).size(),
            ref::matchings(make_complete(4), false).size());
}

TEST(DistanceTable, AgreesWithOracle) {
  const Graph g = make_cycle(5);
  const auto ts = ts_distance_table(g);
  const auto rt = rt_distance_table(g);
  ASSERT_EQ(ts.size(), 120u);
  for (std::uint64_t r = 0; r < 120; r += 7) {
    const Configuration f(permutation_unrank(r, 5));
    EXPECT_EQ(ts[r], ts_oracle(g, f).length);
    EXPECT_EQ(rt[r], rt_oracle(g, f).length);
  }
  EXPECT_EQ(ts[0], 0);
}

TEST(DistanceTable, UnreachableOnDisconnected) {
  const Graph g(3, {{0, 1}});
  const auto ts = ts_distance_table(g);
  EXPECT_EQ(ts[permutation_rank({0, 2, 1})], 255);
  EXPECT_EQ(ts[permutation_rank({1, 0, 2})], 1);
}

}  // namespace
}  // namespace tokswap
