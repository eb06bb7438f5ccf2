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

#include "tokswap/permutation_rank.hpp"

#include "tokswap/error.hpp"

namespace tokswap {

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw InputError("factorial out of range");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t permutation_rank(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  if (n > 20) throw InputError("permutation too long to rank");
  std::uint64_t rank = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    // Digit = number of unused values smaller than perm[i].
    const std::uint32_t below = used & ((1u << perm[i]) - 1u);
    const int digit = perm[i] - __builtin_popcount(below);
    rank = rank * static_cast<std::uint64_t>(n - i) + digit;
    used |= 1u << perm[i];
  }
  return rank;
}

std::vector<int> permutation_unrank(std::uint64_t rank, int n) {
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t base = static_cast<std::uint64_t>(n - i);
    digits[i] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> perm(n);
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    int skip = digits[i];
    for (int v = 0; v < n; ++v) {
      if (used & (1u << v)) continue;
      if (skip-- == 0) {
        perm[i] = v;
        used |= 1u << v;
        break;
      }
    }
  }
  return perm;
}

}  // namespace tokswap
