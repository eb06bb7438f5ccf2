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

#include <utility>
#include <vector>

namespace tokswap {

/// Maximum-cardinality matching in a general graph on 0..n-1 (Edmonds'
/// blossom algorithm). Returns mate[v], or -1 for unmatched vertices.
std::vector<int> maximum_matching(int n,
                                  const std::vector<std::pair<int, int>>& edges);

/// Maximum set of s-t paths in a directed graph that share no vertex other
/// than s and t. Each path is returned without s and t. Unit vertex
/// capacities are handled by splitting every vertex into an in/out pair.
std::vector<std::vector<int>> vertex_disjoint_paths(
    int n, const std::vector<std::pair<int, int>>& arcs, int s, int t);

}  // namespace tokswap
