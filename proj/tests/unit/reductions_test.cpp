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

#include <set>
#include <sstream>

#include "../support/reference.hpp"
#include "tokswap/error.hpp"
#include "tokswap/oracle.hpp"
#include "tokswap/reductions.hpp"
#include "tokswap/sat.hpp"
#include "tokswap/verify.hpp"

namespace tokswap {
namespace {

ThreeDMInstance example_3dm() { return {2, {{1, 1, 1}, {1, 1, 2}, {2, 2, 2}}}; }

// C1={x1,x2}, C2={x3} in F1; C3={x1}, C4={x2,x3} in F2; C5={-x1,-x2,-x3}.
SepSatInstance example_f() {
  return {3, {{1, 2}, {3}, {1}, {2, 3}, {-1, -2, -3}}, {1, 1, 2, 2, 3}};
}

SepSatInstance tiny_unsat() { return {1, {{1}, {1}, {-1}}, {1, 2, 3}}; }

const Assignment kExamplePhi{true, false, true};

int max_token_distance(const Instance& inst) {
  const auto d = distances(inst.graph);
  int best = 0;
  for (int v = 0; v < inst.graph.order(); ++v) {
    best = std::max(best, d[v][inst.tokens.token_on(v)]);
  }
  return best;
}

TEST(Sat, Basics) {
  const Cnf f{2, {{1, -2}, {2}}};
  EXPECT_TRUE(satisfies(f, {true, true}));
  EXPECT_EQ(first_violated(f, {false, true}), 0);
  EXPECT_EQ(first_violated(f, {true, true}), -1);
  EXPECT_EQ(brute_force_sat(f), (Assignment{true, true}));
  EXPECT_FALSE(brute_force_sat({1, {{1}, {-1}}}).has_value());
  EXPECT_THROW(validate_cnf({1, {{2}}}), InputError);
  EXPECT_THROW(validate_cnf({1, {{0}}}), InputError);
  EXPECT_THROW(brute_force_sat({30, {}}), InputError);
}

TEST(Sat, DimacsRoundTrip) {
  std::istringstream in("c comment\np cnf 3 2\n1 -2 0\n3\n0\n");
  const Cnf f = read_dimacs(in);
  EXPECT_EQ(f.vars, 3);
  EXPECT_EQ(f.clauses, (std::vector<Clause>{{1, -2}, {3}}));
  std::istringstream again(write_dimacs(f));
  EXPECT_EQ(read_dimacs(again).clauses, f.clauses);
  std::istringstream bad("p cnf 1 1\n2 0\n");
  EXPECT_THROW(read_dimacs(bad), InputError);
}

TEST(SepSat, ValidationAndPartition) {
  EXPECT_NO_THROW(validate_sepsat(example_f()));
  SepSatInstance broken = example_f();
  broken.part[0] = 2;
  EXPECT_THROW(validate_sepsat(broken), InputError);
  const SepSatInstance rec = partition_sepsat(example_f().cnf());
  EXPECT_EQ(rec.part.size(), 5u);
  EXPECT_NO_THROW(validate_sepsat(rec));
  EXPECT_EQ(rec.part[4], 3);
  EXPECT_NE(rec.part[0], rec.part[2]);
}

TEST(SepSat, ThreeSatExamples) {
  const SepSatReduction one = reduce_3sat_sepsat({1, {{1}}});
  EXPECT_NO_THROW(validate_sepsat(one.sepsat));
  EXPECT_TRUE(ref::satisfiable(one.sepsat.cnf()));
  const Assignment lifted = lift_assignment(one, {true});
  EXPECT_TRUE(satisfies(one.sepsat.cnf(), lifted));
  EXPECT_EQ(lower_assignment(one, lifted), (Assignment{true}));

  const SepSatReduction un = reduce_3sat_sepsat({1, {{1}, {-1}}});
  EXPECT_NO_THROW(validate_sepsat(un.sepsat));
  EXPECT_FALSE(ref::satisfiable(un.sepsat.cnf()));

  const SepSatReduction empty = reduce_3sat_sepsat({0, {}});
  EXPECT_TRUE(empty.sepsat.clauses.empty());
  EXPECT_THROW(reduce_3sat_sepsat({4, {{1, 2, 3, 4}}}), InputError);
}

TEST(SepSat, RandomEquisatisfiable) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const Cnf f = ref::random_3cnf(5, 8, rng);
    const SepSatReduction r = reduce_3sat_sepsat(f);
    EXPECT_NO_THROW(validate_sepsat(r.sepsat));
    const auto model = brute_force_sat(f);
    EXPECT_EQ(model.has_value(), ref::satisfiable(r.sepsat.cnf()));
    if (model) {
      const Assignment lifted = lift_assignment(r, *model);
      EXPECT_TRUE(satisfies(r.sepsat.cnf(), lifted));
      EXPECT_TRUE(satisfies(f, lower_assignment(r, lifted)));
    }
  }
}

TEST(ThreeDM, ExampleGraph) {
  const ReductionOutput red = reduce_3dm_ts(example_3dm());
  EXPECT_EQ(red.instance.graph.order(), 30);
  EXPECT_TRUE(red.certificate.bipartite);
  EXPECT_EQ(red.certificate.max_degree, 3);
  EXPECT_EQ(red.certificate.expected_optimum, 42);
  EXPECT_TRUE(red.instance.graph.has_edge(red.id("u_{1,1}"), red.id("v'_{1,1}")));
  EXPECT_TRUE(red.instance.graph.has_edge(red.id("v_{2,1}"), red.id("v'_{2,3}")));
  EXPECT_EQ(red.instance.tokens.token_on(red.id("u_{2,1}")), red.id("u'_{2,1}"));
  EXPECT_THROW(red.id("nope"), InputError);
}

TEST(ThreeDM, SolutionMapAndBound) {
  const ThreeDMInstance inst = example_3dm();
  EXPECT_TRUE(is_3dm_solution(inst, {0, 2}));
  EXPECT_FALSE(is_3dm_solution(inst, {0, 1}));
  const ReductionOutput red = reduce_3dm_ts(inst);
  const SwapSequence seq = map_3dm_solution(inst, {0, 2});
  EXPECT_EQ(seq.size(), 42u);
  EXPECT_TRUE(verify_swaps(red.instance.graph, red.instance.tokens, seq).ok);
  EXPECT_EQ(three_dm_lower_bound(red.instance.graph, red.instance.tokens), 42);
  EXPECT_THROW(map_3dm_solution(inst, {0, 1}), InputError);
  const Vertex u = red.id("u_{1,1}");
  EXPECT_EQ(move_count(red.instance.tokens, seq, red.instance.tokens.token_on(u)), 5);

  const ThreeDMInstance single{1, {{1, 1, 1}}};
  const ReductionOutput r1 = reduce_3dm_ts(single);
  EXPECT_EQ(r1.instance.graph.order(), 12);
  EXPECT_LE(r1.certificate.max_degree, 3);
  EXPECT_EQ(map_3dm_solution(single, {0}).size(), 21u);
  EXPECT_THROW(validate_3dm({1, {{1, 2, 1}}}), InputError);
}

TEST(RvM, ExampleF) {
  const ReductionOutput red = reduce_sepsat_rvm(example_f());
  EXPECT_EQ(red.instance.graph.order(), 28);
  EXPECT_TRUE(red.certificate.bipartite);
  EXPECT_EQ(red.certificate.max_degree, 4);
  EXPECT_EQ(red.certificate.expected_optimum, 3);
  EXPECT_EQ(max_token_distance(red.instance), 3);
  EXPECT_TRUE(red.instance.graph.has_edge(red.id("v_1"), red.id("u_{2,1}")));
  EXPECT_TRUE(red.instance.graph.has_edge(red.id("u_{2,3}"), red.id("v'_5")));
  const auto sol = map_assignment_rvm(example_f(), kExamplePhi);
  EXPECT_EQ(sol.size(), 3u);
  EXPECT_EQ(sol[0], sol[2]);
  EXPECT_TRUE(verify_parallel(red.instance.graph, red.instance.tokens, sol).ok);
  try {
    map_assignment_rvm(example_f(), {false, false, false});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("C1"), std::string::npos);
  }
  EXPECT_THROW(reduce_sepsat_rvm(example_f(), 2), InputError);
}

TEST(RvM, PaddedVariants) {
  for (int p = 4; p <= 6; ++p) {
    const ReductionOutput red = reduce_sepsat_rvm(example_f(), p);
    EXPECT_TRUE(red.certificate.bipartite);
    EXPECT_EQ(red.certificate.expected_optimum, p);
    EXPECT_EQ(max_token_distance(red.instance), p);
    const auto sol = map_assignment_rvm(example_f(), kExamplePhi, p);
    EXPECT_EQ(static_cast<int>(sol.size()), p);
    EXPECT_TRUE(verify_parallel(red.instance.graph, red.instance.tokens, sol).ok);
  }
}

TEST(RvM, TinyUnsatHasNoThreeStepSolution) {
  const ReductionOutput red = reduce_sepsat_rvm(tiny_unsat());
  EXPECT_EQ(ref::rt_distance(red.instance.graph, red.instance.tokens.tokens(), 3), -1);
}

TEST(RvM, DegreeThree) {
  const ReductionOutput red = reduce_sepsat_rvm_deg3(example_f());
  EXPECT_TRUE(red.certificate.bipartite);
  EXPECT_EQ(red.certificate.max_degree, 3);
  EXPECT_EQ(red.certificate.expected_optimum, 5);
  EXPECT_EQ(max_token_distance(red.instance), 5);
  const auto sol = map_assignment_rvm_deg3(example_f(), kExamplePhi);
  EXPECT_EQ(sol.size(), 5u);
  EXPECT_TRUE(verify_parallel(red.instance.graph, red.instance.tokens, sol).ok);

  const ReductionOutput single = reduce_sepsat_rvm_deg3(tiny_unsat());
  EXPECT_EQ(single.instance.graph.order(), 19);
  EXPECT_EQ(max_token_distance(single.instance), 5);

  const SepSatInstance two{2, {{1, 2}, {1, 2}, {-1, -2}}, {1, 2, 3}};
  const ReductionOutput small = reduce_sepsat_rvm_deg3(two);
  EXPECT_TRUE(verify_parallel(small.instance.graph, small.instance.tokens,
                              map_assignment_rvm_deg3(two, {true, false}))
                  .ok);
}

TEST(Colored, TwoColorGadget) {
  // the left gadget: x1 in C1 (F1), C2 (F2), and negated in C3 (F3)
  const SepSatInstance inst{1, {{1}, {1}, {-1}}, {1, 2, 3}};
  const ReductionOutput red = reduce_sepsat_2c3(inst);
  const Graph& g = red.instance.graph;
  EXPECT_EQ(g.order(), 6 + 9);
  EXPECT_EQ(g.size(), 6u + 9u);
  const auto& f = red.instance.colors.colors();
  const auto& goal = red.instance.goal.colors();
  std::set<std::string> f2, g2;
  for (int v = 0; v < g.order(); ++v) {
    if (f[v] == 2) f2.insert(g.label(v));
    if (goal[v] == 2) g2.insert(g.label(v));
  }
  EXPECT_EQ(f2, (std::set<std::string>{"u_1", "v_1", "v'_2", "v_3"}));
  EXPECT_EQ(g2, (std::set<std::string>{"u'_1", "v'_1", "v_2", "v'_3"}));
  EXPECT_TRUE(g.has_edge(red.id("v_{1,1}"), red.id("u_{1,1}")));
  EXPECT_TRUE(g.has_edge(red.id("u_{1,3}"), red.id("v'_3")));
  EXPECT_TRUE(red.certificate.bipartite);
  EXPECT_EQ(red.certificate.expected_optimum, 3);
  EXPECT_EQ(ref::rt_colored_distance(g, f, goal, 3), -1);

  const ReductionOutput ex = reduce_sepsat_2c3(example_f());
  const auto sol = map_assignment_2c3(example_f(), kExamplePhi);
  EXPECT_EQ(sol.size(), 3u);
  EXPECT_TRUE(verify_colored(ex.instance.graph, ex.instance.colors, ex.instance.goal, sol).ok);
}

TEST(Colored, ThreeColorGadget) {
  const ReductionOutput red = reduce_sepsat_3c2(example_f());
  const Graph& g = red.instance.graph;
  auto fc = [&](const std::string& l) { return red.instance.colors.colors()[red.id(l)]; };
  auto gc = [&](const std::string& l) { return red.instance.goal.colors()[red.id(l)]; };
  const std::vector<std::tuple<std::string, int, int>> table{
      {"u_2", 2, 1},     {"u'_2", 1, 2},    {"u_{2,1}", 1, 1}, {"u_{2,2}", 2, 2},
      {"u_{2,3}", 1, 1}, {"u_{2,4}", 2, 2}, {"v_1", 3, 1},     {"v'_1", 1, 3},
      {"v_5", 3, 1},     {"v'_5", 1, 3},    {"v_3", 3, 2},     {"v'_3", 2, 3}};
  for (const auto& [l, a, b] : table) {
    EXPECT_EQ(fc(l), a) << l;
    EXPECT_EQ(gc(l), b) << l;
  }
  EXPECT_EQ(g.order(), 28);
  EXPECT_EQ(red.certificate.expected_optimum, 2);
  const auto sol = map_assignment_3c2(example_f(), kExamplePhi);
  EXPECT_EQ(sol.size(), 2u);
  EXPECT_TRUE(verify_colored(g, red.instance.colors, red.instance.goal, sol).ok);

  const ReductionOutput un = reduce_sepsat_3c2(tiny_unsat());
  EXPECT_GT(rt_colored_oracle(un.instance.graph, un.instance.colors, un.instance.goal).length,
            2);
}

TEST(CountingGadget, Examples) {
  const ReductionOutput e = build_counting_gadget(make_path(2));
  EXPECT_EQ(e.instance.graph.order(), 4);
  EXPECT_EQ(e.instance.graph.size(), 4u);
  EXPECT_EQ(count_two_step(e.instance.graph, e.instance.tokens),
            ref::count_two_step(e.instance.graph, e.instance.tokens.tokens()));
  EXPECT_EQ(count_two_step(e.instance.graph, e.instance.tokens), 2u);

  const ReductionOutput p3 = build_counting_gadget(make_path(3));
  EXPECT_EQ(p3.instance.graph.order(), 6);
  EXPECT_EQ(p3.instance.graph.size(), 8u);
  EXPECT_TRUE(p3.instance.graph.is_bipartite());
  EXPECT_EQ(count_two_step(p3.instance.graph, p3.instance.tokens), 0u);

  const ReductionOutput c4 = build_counting_gadget(make_cycle(4));
  EXPECT_TRUE(c4.certificate.bipartite);
  EXPECT_EQ(count_two_step(c4.instance.graph, c4.instance.tokens),
            ref::count_two_step(c4.instance.graph, c4.instance.tokens.tokens()));
  EXPECT_FALSE(build_counting_gadget(make_cycle(3)).certificate.bipartite);
}

}  // namespace
}  // namespace tokswap
