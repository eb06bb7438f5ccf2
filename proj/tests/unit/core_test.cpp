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

#include "tokswap/configuration.hpp"
#include "tokswap/error.hpp"
#include "tokswap/graph.hpp"
#include "tokswap/permutation_rank.hpp"
#include "tokswap/verify.hpp"

namespace tokswap {
namespace {

TEST(Graph, NormalizesAndSortsEdges) {
  Graph g(3, {{2, 1}, {1, 0}});
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.edges()[0], Edge(0, 1));
  EXPECT_EQ(g.edges()[1], Edge(1, 2));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_EQ(g.edge_index(1, 2), 1);
  EXPECT_EQ(g.edge_index(0, 2), -1);
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(2, {{0, 0}}), InputError);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph(2, {{0, 2}}), InputError);
  EXPECT_THROW(Graph(2, {}, {"a"}), InputError);
}

TEST(Graph, Families) {
  const Graph l = make_lollipop(3, 2);
  EXPECT_EQ(l.order(), 6);
  EXPECT_EQ(l.size(), 6u + 2u);
  EXPECT_EQ(l.label(0), "-3");
  EXPECT_EQ(l.label(5), "2");
  const Graph q = make_starpath(3, 2);
  EXPECT_EQ(q.size(), 5u);
  EXPECT_EQ(q.degree(3), 4);
  EXPECT_EQ(make_cycle(5).size(), 5u);
  EXPECT_EQ(make_complete(5).size(), 10u);
  EXPECT_EQ(make_path(4).label(0), "1");
  EXPECT_EQ(make_family(FamilyKind::kStarPath, 3, 2), q);
  EXPECT_EQ(family_from_name("starpath"), FamilyKind::kStarPath);
  EXPECT_FALSE(family_from_name("tree").has_value());
}

TEST(Graph, StructuralQueries) {
  EXPECT_TRUE(make_cycle(6).is_bipartite());
  EXPECT_FALSE(make_cycle(5).is_bipartite());
  Graph split(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(split.is_connected());
  EXPECT_EQ(split.components().size(), 2u);
  EXPECT_THROW(distances(split), InputError);
  EXPECT_EQ(bfs_distances(split, 0)[2], -1);
  EXPECT_EQ(distances(make_path(5))[0][4], 4);
  EXPECT_EQ(make_starpath(4, 1).max_degree(), 5);
}

TEST(Configuration, ValidatesPermutation) {
  EXPECT_THROW(Configuration({0, 0}), InputError);
  EXPECT_THROW(Configuration({0, 2}), InputError);
  const Configuration f({2, 0, 1});
  EXPECT_EQ(f.vertex_of(2), 0);
  EXPECT_FALSE(f.is_identity());
  EXPECT_TRUE(Configuration::identity(4).is_identity());
  EXPECT_EQ(f.swapped(0, 2).tokens(), (std::vector<Token>{1, 0, 2}));
}

TEST(Configuration, OrbitsStartAtSmallestVertex) {
  const Configuration f({1, 2, 0, 3, 5, 4});
  const auto orb = orbits(f);
  ASSERT_EQ(orb.size(), 3u);
  EXPECT_EQ(orb[0], (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(orb[1], (std::vector<Vertex>{3}));
  EXPECT_EQ(orb[2], (std::vector<Vertex>{4, 5}));
}

TEST(Configuration, SwapsAndMatchings) {
  const Graph g = make_path(4);
  const Configuration f({1, 0, 3, 2});
  EXPECT_TRUE(apply_parallel_swap(g, f, {{0, 1}, {2, 3}}).is_identity());
  EXPECT_THROW(apply_parallel_swap(g, f, {{0, 1}, {1, 2}}), InputError);
  EXPECT_THROW(apply_swap(g, f, {0, 2}), InputError);
  EXPECT_TRUE(apply_swaps(g, f, {{0, 1}, {2, 3}}).is_identity());
}

TEST(Configuration, MoveCounts) {
  const Graph g = make_path(3);
  const Configuration f({2, 1, 0});
  const SwapSequence seq{{0, 1}, {1, 2}, {0, 1}};
  ASSERT_TRUE(apply_swaps(g, f, seq).is_identity());
  EXPECT_EQ(move_count(f, seq, 2), 2);
  EXPECT_EQ(move_count(f, seq, 0), 2);
  EXPECT_EQ(move_count(f, seq, 1), 2);
  EXPECT_THROW(move_count(f, seq, 7), InputError);
}

TEST(Coloring, Consistency) {
  EXPECT_TRUE(consistent(Coloring({1, 2, 2}), Coloring({2, 1, 2})));
  EXPECT_FALSE(consistent(Coloring({1, 1, 2}), Coloring({2, 2, 1})));
  EXPECT_THROW(Coloring({0, 1}), InputError);
  EXPECT_EQ(Coloring({1, 3, 3}).num_colors(), 3);
}

TEST(Verify, ReportsFailures) {
  Instance inst;
  inst.kind = InstanceKind::kTs;
  inst.graph = make_path(3);
  inst.tokens = Configuration({1, 0, 2});
  EXPECT_TRUE(verify(inst, Solution{{{{0, 1}}}}).ok);
  const auto bad = verify(inst, Solution{{{{0, 2}}}});
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.step, 0);
  EXPECT_FALSE(verify(inst, Solution{}).ok);
  EXPECT_THROW(verify(inst, Solution{{{{0, 1}, {1, 2}}}}), InputError);
  inst.budget = 0;
  EXPECT_FALSE(verify(inst, Solution{{{{0, 1}}}}).ok);

  Instance col;
  col.kind = InstanceKind::kColored;
  col.graph = make_path(3);
  col.colors = Coloring({2, 1, 1});
  col.goal = Coloring({1, 1, 2});
  EXPECT_TRUE(verify(col, Solution{{{{0, 1}}, {{1, 2}}}}).ok);
  EXPECT_FALSE(verify(col, Solution{{{{0, 1}}}}).ok);
}

TEST(PermutationRank, RoundTripsAndIsDense) {
  EXPECT_EQ(factorial(0), 1u);
  EXPECT_EQ(factorial(20), 2432902008176640000ULL);
  EXPECT_EQ(permutation_rank({0, 1, 2, 3}), 0u);
  EXPECT_EQ(permutation_rank({3, 2, 1, 0}), 23u);
  std::vector<bool> seen(120, false);
  for (std::uint64_t r = 0; r < 120; ++r) {
    const auto p = permutation_unrank(r, 5);
    EXPECT_EQ(permutation_rank(p), r);
    seen[r] = true;
  }
  EXPECT_EQ(std::count(seen.begin(), seen.end(), true), 120);
}

}  // namespace
}  // namespace tokswap
