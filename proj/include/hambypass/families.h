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

#ifndef HAMBYPASS_FAMILIES_H_
#define HAMBYPASS_FAMILIES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hambypass/digraph.h"
#include "hambypass/solvers.h"

namespace hambypass {

enum class Family { kD0, kDpkk, kT5, kHn, kDnq, kComplete, kCycle, kB6, kB8 };

std::string_view family_name(Family f);
// Throws Error(kBadParameters) for an unknown name.
Family parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::kComplete;
  int p = 0;  // order for D0, Dpkk, Complete, Cycle
  int k = 0;  // Dpkk
  int n = 0;  // Hn, Dnq
  int q = 0;  // Dnq
  // D0: arcs of the subdigraph induced by B, in B-local indices
  // 0 .. (p-1)/2 - 1.
  std::vector<Arc> b_arcs;
};

// Digraph for every family except B6/B8, whose fixtures are bipartite; for
// those the underlying digraph is returned. Throws Error(kBadParameters)
// naming the violated range.
Digraph generate(const FamilySpec& spec);

Digraph gen_complete(int m);
Digraph gen_cycle(int n);
Digraph gen_T5();
// F = {0, ..., (p-1)/2}, B = {(p+1)/2, ..., p-1}.
Digraph gen_D0(int p, std::span<const Arc> b_arcs = {});
Digraph gen_D0_complete_b(int p);
// K*_{p-k} on {0, ..., p-k-1} and K*_{k+1} on {p-k-1, ..., p-1}; the shared
// vertex is p-k-1.
Digraph gen_Dpkk(int p, int k);
Digraph gen_Dnq(int n, int q);

// H(n): x_i is vertex i for i in [0, n-4]; y_1, y_2, y_3 are n-3, n-2, n-1.
Digraph gen_Hn(int n);
int hn_x(int n, int i);
int hn_y(int n, int j);

// The arc-set clauses of H(n), in the order they are written in its
// definition. Exposed so that each clause can be counted and audited.
struct HnClause {
  std::string description;
  std::vector<Arc> arcs;
};
std::vector<HnClause> hn_clauses(int n);

// The published bypass y_1 y_2 y_3 x_2 x_3 ... x_{n-4} x_0 x_1.
Walk hn_witness_bypass(int n);

// Balanced bipartite digraphs of order 2a containing the Hamiltonian cycle
// x_1 y_1 x_2 y_2 ... x_a y_a x_1, with X = {0..a-1} and Y = {a..2a-1}.
// Every Hamiltonian balanced bipartite digraph is isomorphic to one of
// them. A member is selected by a mask over the 2a^2 - 2a remaining
// cross-partition arcs.
class FixedCycleSpace {
 public:
  explicit FixedCycleSpace(int a);

  int half_order() const { return a_; }
  int free_arcs() const { return static_cast<int>(free_.size()); }
  std::uint64_t size() const { return std::uint64_t{1} << free_arcs(); }
  const std::vector<Arc>& free_arc_list() const { return free_; }
  std::vector<int> cycle() const;

  Digraph digraph(std::uint64_t mask) const;
  BipartiteDigraph bipartite(std::uint64_t mask) const;

 private:
  int a_;
  std::vector<VertexMask> base_out_;
  std::vector<Arc> free_;
};

struct B6Derivation {
  BipartiteDigraph fixture;
  std::uint64_t enumerated = 0;
  std::uint64_t survivors = 0;  // strong, A_1, non-Hamiltonian
  int classes = 0;
  Walk bypass;
};

// Enumerates all 2^18 balanced bipartite digraphs on 3 + 3 vertices, keeps
// the strong non-Hamiltonian ones satisfying A_1 and groups them by
// isomorphism. Throws Error(kDerivationFailed) unless exactly one class
// survives and its representative (the lowest enumeration mask) has a
// Hamiltonian bypass.
B6Derivation derive_B6();

// Cached result of derive_B6().
const BipartiteDigraph& b6_fixture();

struct B8Search {
  Outcome outcome = Outcome::kExhausted;
  std::optional<BipartiteDigraph> fixture;
  std::uint64_t mask = 0;
  std::uint64_t examined = 0;
};

// Scans FixedCycleSpace(4) in increasing mask order for a member that
// satisfies A_0 and has no Hamiltonian bypass; examines at most
// `candidate_budget` masks (0 examines none). NotFound means the whole space
// was scanned.
B8Search search_B8(std::uint64_t candidate_budget);

// Arc-list text with a provenance header.
std::string fixture_text(const BipartiteDigraph& b,
                         const std::vector<std::string>& provenance);

// Regenerates the stored fixture file for kB6 or kB8: the derived digraph
// with a header naming the deriving operation and its certification checks.
// Throws Error(kBadParameters) for other families.
std::string regenerate_fixture(Family f);

}  // namespace hambypass

#endif  // HAMBYPASS_FAMILIES_H_
