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
#include "tokswap/oracle.hpp"
#include "tokswap/twostep.hpp"
#include "tokswap/verify.hpp"

namespace tokswap {
namespace {

void expect_witness(const Graph& g, const Configuration& f, const TwoStepAnswer& a) {
  EXPECT_TRUE(verify_parallel(g, f, {a.first, a.second}).ok);
}

TEST(OrbitPair, Examples) {
  const Graph g = make_path(3);
  const Configuration id = Configuration::identity(3);
  const auto fixed = orbit_pair_feasible(g, id, {0}, {1});
  ASSERT_TRUE(fixed.has_value());
  EXPECT_TRUE(fixed->s.empty());
  EXPECT_TRUE(fixed->t.empty());

  const Configuration ends({2, 1, 0});
  EXPECT_FALSE(orbit_pair_feasible(g, ends, {0, 2}, {0, 2}).has_value());

  const Graph sq(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
  const Configuration rev({3, 2, 1, 0});
  const auto orb = orbits(rev);
  ASSERT_EQ(orb.size(), 2u);
  const auto al = orbit_pair_feasible(sq, rev, orb[0], orb[1]);
  ASSERT_TRUE(al.has_value());
  EXPECT_TRUE(verify_parallel(sq, rev, {al->s, al->t}).ok);
  EXPECT_THROW(orbit_pair_feasible(sq, rev, {0, 1}, orb[1]), InputError);
}

TEST(DecideRt2, Examples) {
  const Graph sq(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
  const TwoStepAnswer id = decide_rt2(sq, Configuration::identity(4));
  EXPECT_TRUE(id.yes);
  EXPECT_TRUE(id.first.empty() && id.second.empty());
  const Configuration rev({3, 2, 1, 0});
  const TwoStepAnswer a = decide_rt2(sq, rev);
  ASSERT_TRUE(a.yes);
  expect_witness(sq, rev, a);
  EXPECT_FALSE(decide_rt2(make_path(5), Configuration({4, 1, 2, 3, 0})).yes);
}

TEST(DecideRt2, OrbitGraphMatchesOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 4;
    const Graph g = ref::random_connected(n, 0.4, rng);
    const Configuration f(ref::random_permutation(n, rng));
    const OrbitPairGraph og = build_orbit_pair_graph(g, f);
    for (std::size_t e = 0; e < og.edges.size(); ++e) {
      const auto& w = og.edge_witness[e];
      EXPECT_TRUE(verify_parallel(g, f, {w.s, w.t}).message.find("edge") ==
                  std::string::npos);
    }
    for (std::size_t a = 0; a < og.nodes.size(); ++a) {
      // a lone orbit is two-step iff its induced sub-instance is
      std::vector<Token> t(n);
      for (int v = 0; v < n; ++v) t[v] = v;
      for (Vertex v : og.nodes[a]) t[v] = f.token_on(v);
      const int rt = ref::rt_distance(g, t, 3);
      EXPECT_EQ(og.self_witness[a].has_value(), rt >= 0 && rt <= 2);
    }
  }
}

TEST(DecideRt2, AgreesWithReference) {
  std::mt19937_64 rng(32);
  int yes = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 6;
    const Graph g = ref::random_connected(n, 0.45, rng);
    // mostly products of two random matchings, so that "yes" is common
    std::vector<Token> t = ref::identity(n);
    const auto ms = ref::matchings(g, true);
    if (trial % 3 != 0) {
      for (int k = 0; k < 2; ++k) t = ref::apply(t, ms[rng() % ms.size()]);
    } else {
      t = ref::random_permutation(n, rng);
    }
    const Configuration f(t);
    const TwoStepAnswer a = decide_rt2(g, f);
    const int rt = ref::rt_distance(g, t, 2);
    EXPECT_EQ(a.yes, rt >= 0) << "trial " << trial;
    if (a.yes) {
      ++yes;
      expect_witness(g, f, a);
    }
  }
  EXPECT_GT(yes, 50);
}

TEST(FlowNetwork, PartitionAndArcs) {
  const Graph g = make_path(4);
  const FlowNetwork net = build_flow_network(g, Coloring({2, 1, 1, 2}), Coloring({1, 1, 2, 2}));
  EXPECT_EQ(net.v_s, (std::vector<Vertex>{2}));
  EXPECT_EQ(net.v_t, (std::vector<Vertex>{0}));
  EXPECT_EQ(net.v_1, (std::vector<Vertex>{1}));
  EXPECT_EQ(net.v_2, (std::vector<Vertex>{3}));
  EXPECT_EQ(net.source(), 4);
  EXPECT_EQ(net.sink(), 5);
  auto has = [&](int a, int b) {
    return std::find(net.arcs.begin(), net.arcs.end(), std::pair{a, b}) != net.arcs.end();
  };
  EXPECT_TRUE(has(4, 2));
  EXPECT_TRUE(has(2, 1));
  EXPECT_TRUE(has(2, 3));
  EXPECT_TRUE(has(1, 0));
  EXPECT_TRUE(has(0, 5));
  EXPECT_FALSE(has(0, 1));
  EXPECT_THROW(build_flow_network(g, Coloring({2, 1, 1, 2}), Coloring({2, 2, 2, 1})),
               InputError);
  EXPECT_THROW(build_flow_network(g, Coloring({3, 1, 1, 2}), Coloring({1, 1, 3, 2})),
               InputError);
}

TEST(DecideRt2Colored, Examples) {
  const Graph p2 = make_path(2);
  const auto same = decide_rt2_2colored(p2, Coloring({1, 2}), Coloring({1, 2}));
  EXPECT_TRUE(same.yes);
  EXPECT_TRUE(same.first.empty() && same.second.empty());
  const auto one = decide_rt2_2colored(p2, Coloring({1, 2}), Coloring({2, 1}));
  ASSERT_TRUE(one.yes);
  EXPECT_TRUE(verify_colored(p2, Coloring({1, 2}), Coloring({2, 1}),
                             {one.first, one.second})
                  .ok);
  const Graph p4 = make_path(4);
  EXPECT_FALSE(decide_rt2_2colored(p4, Coloring({2, 1, 1, 1}), Coloring({1, 1, 1, 2})).yes);
}

TEST(DecideRt2Colored, AgreesWithReferenceAndPathShape) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 6;
    const Graph g = ref::random_connected(n, 0.35, rng);
    std::vector<int> f(n);
    for (int v = 0; v < n; ++v) f[v] = 1 + static_cast<int>(rng() % 2);
    std::vector<int> goal = f;
    std::shuffle(goal.begin(), goal.end(), rng);
    const auto a = decide_rt2_2colored(g, Coloring(f), Coloring(goal));
    const int rt = ref::rt_colored_distance(g, f, goal, 2);
    EXPECT_EQ(a.yes, rt >= 0) << "trial " << trial;
    if (!a.yes) continue;
    EXPECT_TRUE(verify_colored(g, Coloring(f), Coloring(goal), {a.first, a.second}).ok);
    for (const auto& path : a.paths) {
      EXPECT_TRUE(path_is_two_step(Coloring(f), Coloring(goal), path));
      EXPECT_EQ(f[path.front()], goal[path.back()]);
      EXPECT_NE(goal[path.front()], f[path.front()]);
    }
  }
}

}  // namespace
}  // namespace tokswap
