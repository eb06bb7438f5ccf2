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
#include <vector>

namespace tokswap {

/// n! for n <= 20.
std::uint64_t factorial(int n);

/// Lehmer-code rank of a permutation of 0..n-1 (n <= 20). The identity has
/// rank 0.
std::uint64_t permutation_rank(const std::vector<int>& perm);

/// Inverse of permutation_rank.
std::vector<int> permutation_unrank(std::uint64_t rank, int n);

}  // namespace tokswap
