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

#ifndef HAMBYPASS_LEMMAS_H_
#define HAMBYPASS_LEMMAS_H_

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hambypass/digraph.h"

namespace hambypass {

// Single-vertex insertion into a path.

struct InsertionWitness {
  // x goes between path[position] and path[position + 1] (0-based).
  int position = 0;
  Walk result;
};

// Which of the three sufficient conditions for an insertion slot hold for x
// against the path P = x_1 ... x_m.
struct InsertionConditions {
  int m = 0;
  int degree_to_path = 0;  // d(x, V(P))
  bool cond_i = false;     // d >= m + 2
  bool cond_ii = false;    // d >= m + 1 and (x -/-> x_1 or x_m -/-> x)
  bool cond_iii = false;   // d >= m, x -/-> x_1 and x_m -/-> x
  bool any() const { return cond_i || cond_ii || cond_iii; }
};

// Throws Error(kXOnPath) if x lies on the path, Error(kOutOfRange) for bad
// vertices and Error(kPreconditionFailed) if `path` is not a path of d with
// at least two vertices.
InsertionConditions insertion_conditions(const Digraph& d,
                                         std::span<const int> path, int x);

// Lowest-index slot i with path[i] -> x -> path[i+1], or nullopt.
std::optional<InsertionWitness> insert_vertex(const Digraph& d,
                                              std::span<const int> path,
                                              int x);

// Cycles through a vertex outside a given cycle.

struct CyclesThrough {
  int m = 0;
  int degree_to_cycle = 0;  // d(x, V(C))
  bool hypothesis_holds = false;  // d(x, V(C)) >= m + 1
  // Every length k in [2, m+1] for which a cycle through x inside
  // V(C) + {x} exists, with one such cycle (starting at x).
  std::map<int, Walk> cycles;
};

// Throws Error(kXOnCycle) if x lies on the cycle and
// Error(kPreconditionFailed) if `cycle` is not a cycle of d.
CyclesThrough cycles_through(const Digraph& d, std::span<const int> cycle,
                             int x);

// Absorbing a path into a path or cycle.

// Inserts u_1 ... u_k of `p` into `q` (a path v_1 ... v_t, or the cycle
// v_1 ... v_t v_1 when q_is_cycle), keeping v_1 and v_t as the endpoints of
// a path result. Each maximal run u_i ... u_i' that shares the insertion arc
// of u_i is spliced in as one block. The result has t + k vertices.
// Throws Error(kHypothesisFailed) naming the first u_i of `p` that has no
// arc v_j v_{j+1} of q with v_j -> u_i -> v_{j+1}, and
// Error(kPreconditionFailed) for overlapping or invalid inputs.
Walk merge_paths(const Digraph& d, std::span<const int> p,
                 std::span<const int> q, bool q_is_cycle, int k);

// Bypasses of Hamiltonian bipartite digraphs from short chords.

enum class ChordOrientation { kYtoX, kXtoY };

// Relative to the Hamiltonian cycle read from position `start`, i.e.
// r_0 r_1 ... r_{2a-1} with r_m = cycle[(start + m) mod 2a], and the
// relabeling x_i = r_{2i-2}, y_i = r_{2i-1}: the chord is y_k -> x_1.
// orientation records which partite set x_1 belongs to: kYtoX when the
// relabeled x_1 is in X.
struct ChordSpec {
  int start = 0;
  int k = 1;
  ChordOrientation orientation = ChordOrientation::kYtoX;
  bool operator==(const ChordSpec&) const = default;
};

// Minimal k over every chord of the Hamiltonian cycle, both orientations
// and all rotations; ties go to the lowest start. nullopt when the digraph
// has no arc besides the cycle arcs. Throws Error(kPreconditionFailed) if
// `cycle` is not a Hamiltonian cycle of b.
std::optional<ChordSpec> chord_scan(const BipartiteDigraph& b,
                                    std::span<const int> cycle);

// Some j in [k+1, a] with x_j -> y_1 and x_k -> y_j (relabeled as in
// ChordSpec), lowest first.
std::optional<int> find_chord_partner(const BipartiteDigraph& b,
                                      std::span<const int> cycle,
                                      const ChordSpec& chord);

// For k == 1 the bypass y_1 x_2 y_2 ... x_a y_a x_1 (j is ignored). For
// k >= 2 the bypass
//   y_k x_{k+1} y_{k+1} ... x_j y_1 x_2 y_2 ... x_k y_j x_{j+1} ... y_a x_1
// whose chord is y_k -> x_1. Throws Error(kPreconditionFailed) naming the
// first missing arc.
Walk bipartite_bypass_from_chord(const BipartiteDigraph& b,
                                 std::span<const int> cycle,
                                 const ChordSpec& chord, int j);

}  // namespace hambypass

#endif  // HAMBYPASS_LEMMAS_H_
