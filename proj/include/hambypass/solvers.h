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

#ifndef HAMBYPASS_SOLVERS_H_
#define HAMBYPASS_SOLVERS_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "hambypass/digraph.h"

namespace hambypass {

// Limits the number of backtracking nodes a single solver call may expand.
// node_limit == 0 means unlimited.
struct SolveBudget {
  std::uint64_t node_limit = 0;
};

enum class Outcome { kFound, kNotFound, kExhausted };

std::string_view outcome_name(Outcome o);

struct SolveResult {
  Outcome outcome = Outcome::kNotFound;
  Walk walk;
  std::uint64_t nodes = 0;

  bool found() const { return outcome == Outcome::kFound; }
  bool exhausted() const { return outcome == Outcome::kExhausted; }
};

SolveResult hamiltonian_cycle(const Digraph& d, SolveBudget budget = {});

// Hamiltonian path honoring the optional endpoint constraints. Throws
// Error(kOutOfRange) for a bad endpoint and Error(kBadParameters) when
// from == to.
SolveResult hamiltonian_path(const Digraph& d, std::optional<int> from,
                             std::optional<int> to, SolveBudget budget = {});

// Hamiltonian path x_1 ... x_p with x_1 -> x_p. NotFound for p < 3.
SolveResult hamiltonian_bypass(const Digraph& d, SolveBudget budget = {});

// Longest cycle through z. NotFound means z lies on no cycle.
SolveResult longest_cycle_through(const Digraph& d, int z,
                                  SolveBudget budget = {});

// Some cycle through z with at least min_length vertices; stops at the first
// one found. NotFound is exact.
SolveResult cycle_through_at_least(const Digraph& d, int z, int min_length,
                                   SolveBudget budget = {});

// Some cycle, not necessarily Hamiltonian, containing every vertex of m.
SolveResult cycle_through_set(const Digraph& d, VertexMask m,
                              SolveBudget budget = {});

// D(n, q): the directed n-cycle v_1 ... v_n v_1 with its last q-1 arcs
// reversed, i.e. the path v_1 ... v_{n-q+2} together with the path
// v_1 v_n v_{n-1} ... v_{n-q+2}. The witness is v_1 ... v_n in cycle order.
bool is_dnq(const Digraph& d, std::span<const int> sequence, int q);

// Some D(n, q) on any n vertices of d (a subdigraph, not necessarily
// induced). Throws Error(kBadParameters) unless 3 <= n <= p and 2 <= q <= n.
SolveResult find_dnq(const Digraph& d, int n, int q, SolveBudget budget = {});

// Spanning D(p, q); for q == 2 this is a Hamiltonian bypass. NotFound for
// p < 3.
SolveResult find_spanning_dnq(const Digraph& d, int q, SolveBudget budget = {});

}  // namespace hambypass

#endif  // HAMBYPASS_SOLVERS_H_
