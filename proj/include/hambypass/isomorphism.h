// Copyright 2026 The hambypass Authors.
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

#ifndef HAMBYPASS_ISOMORPHISM_H_
#define HAMBYPASS_ISOMORPHISM_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "hambypass/digraph.h"

namespace hambypass {

inline constexpr int kDefaultIsomorphismBound = 10;

// Returns perm with arc (u,v) of d1 <=> arc (perm[u], perm[v]) of d2, or
// nullopt. Brute-force assignment with (out, in)-degree pruning; throws
// Error(kSizeLimit) when either order exceeds `max_order`.
std::optional<std::vector<int>> isomorphic(
    const Digraph& d1, const Digraph& d2,
    int max_order = kDefaultIsomorphismBound);

// Adjacency bitmask: bit u*(p-1) + (v < u ? v : v-1) is set iff u -> v.
// Defined for p <= 8 (at most 56 bits).
using AdjacencyCode = std::uint64_t;

inline constexpr int kMaxCodeOrder = 8;

inline int arc_bit(int order, int u, int v) {
  return u * (order - 1) + (v < u ? v : v - 1);
}

AdjacencyCode adjacency_code(const Digraph& d);
Digraph from_adjacency_code(int order, AdjacencyCode code);

// Minimum adjacency code over all vertex permutations; two digraphs are
// isomorphic iff their canonical codes agree. Throws Error(kSizeLimit) above
// `max_order`.
AdjacencyCode canonical_code(const Digraph& d, int max_order = 7);

// True iff code is minimal among the codes of all its relabelings. Uses a
// precomputed permutation table for `order`.
class CanonicalFilter {
 public:
  explicit CanonicalFilter(int order);
  bool is_canonical(AdjacencyCode code) const;
  AdjacencyCode canonical(AdjacencyCode code) const;

 private:
  int order_;
  // For each permutation, the image bit position of every arc bit.
  std::vector<std::vector<std::uint8_t>> bit_images_;
};

}  // namespace hambypass

#endif  // HAMBYPASS_ISOMORPHISM_H_
