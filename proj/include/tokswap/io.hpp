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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tokswap/reductions.hpp"
#include "tokswap/sat.hpp"
#include "tokswap/verify.hpp"

namespace tokswap {

/// An instance together with the generator seed, if any, that produced it.
struct InstanceFile {
  Instance instance;
  std::optional<std::uint64_t> seed;
};

/// Instance files are JSON objects with "kind", "n", "edges" and either
/// "tokens" or "colors"/"goal_colors", plus optional "labels", "budget",
/// "family" and "seed". The writer emits keys in sorted order, one per line,
/// with compact values, so write(read(s)) == s for any s it produced.
InstanceFile parse_instance(const std::string& text);
std::string write_instance(const InstanceFile& file);
std::string write_instance(const Instance& instance);

/// {"steps": [[[u,v],...],...]}
Solution parse_solution(const std::string& text);
std::string write_solution(const Solution& solution);

/// {"n": n, "triples": [[i1,i2,i3],...]} with 1-based coordinates.
ThreeDMInstance parse_3dm(const std::string& text);
std::string write_3dm(const ThreeDMInstance& inst);

/// Sep-SAT as JSON {"vars", "clauses", "part"} or as DIMACS, in which case
/// the partition is recovered.
SepSatInstance parse_sepsat(const std::string& text);
std::string write_sepsat(const SepSatInstance& inst);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace tokswap
