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

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tokswap/configuration.hpp"
#include "tokswap/graph.hpp"
#include "tokswap/sat.hpp"
#include "tokswap/verify.hpp"

namespace tokswap {

/// Houses A_1, A_2, A_3 of size n; triples hold 1-based coordinates.
struct ThreeDMInstance {
  int n = 0;
  std::vector<std::array<int, 3>> triples;
};

void validate_3dm(const ThreeDMInstance& inst);

/// Checks that the chosen triples (0-based indices) cover every element once.
bool is_3dm_solution(const ThreeDMInstance& inst, const std::vector<int>& chosen);

struct Certificate {
  bool bipartite = false;
  int max_degree = 0;
  int expected_optimum = 0;
};

struct ReductionOutput {
  Instance instance;  // graph labels carry the structured vertex names
  std::map<std::string, Vertex> label_map;
  Certificate certificate;

  Vertex id(const std::string& label) const;
};

ReductionOutput reduce_3dm_ts(const ThreeDMInstance& inst);

/// The 21-swap rotation for every chosen triple, concatenated in increasing
/// index order. Throws InputError unless `chosen` is a 3DM solution.
SwapSequence map_3dm_solution(const ThreeDMInstance& inst,
                              const std::vector<int>& chosen);

/// 1/2 * sum over misplaced tokens x of (dist(x, goal) + 2): every such
/// token travels its distance and forces one neighbour token to leave and
/// return.
int three_dm_lower_bound(const Graph& g, const Configuration& f);

/// G_F for p = 3; for p > 3 the padded graph with h = p - 3 extra vertices on
/// each variable end and on each clause-to-variable link.
ReductionOutput reduce_sepsat_rvm(const SepSatInstance& inst, int p = 3);

/// <S_1,S_2,S_1> preceded by h shifting steps. Throws InputError naming the
/// first clause phi violates.
ParallelSwapSequence map_assignment_rvm(const SepSatInstance& inst,
                                        const Assignment& phi, int p = 3);

/// G'_F: every u_{i,k} split in two so that the maximum degree is 3.
ReductionOutput reduce_sepsat_rvm_deg3(const SepSatInstance& inst);
ParallelSwapSequence map_assignment_rvm_deg3(const SepSatInstance& inst,
                                             const Assignment& phi);

/// Two colourings on G_F with subdivided clause links; optimum 3.
ReductionOutput reduce_sepsat_2c3(const SepSatInstance& inst);
ParallelSwapSequence map_assignment_2c3(const SepSatInstance& inst,
                                        const Assignment& phi);

/// Three colourings on G_F; optimum 2.
ReductionOutput reduce_sepsat_3c2(const SepSatInstance& inst);
ParallelSwapSequence map_assignment_3c2(const SepSatInstance& inst,
                                        const Assignment& phi);

/// Doubles every vertex u of H into u_1, u_2, joins u_a to v_b for every
/// edge {u,v} of H, and swaps the tokens of each u_1, u_2.
ReductionOutput build_counting_gadget(const Graph& h);

}  // namespace tokswap
