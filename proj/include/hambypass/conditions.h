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

#ifndef HAMBYPASS_CONDITIONS_H_
#define HAMBYPASS_CONDITIONS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hambypass/digraph.h"

namespace hambypass {

// Outcome of a hypothesis predicate. When holds is false the witness is the
// violating vertex tuple; params carries thresholds and the offending sums so
// the violation can be recomputed from scratch.
struct ConditionReport {
  std::string id;
  bool holds = true;
  std::vector<int> witness;
  std::string clause;
  std::map<std::string, long long> params;
};

std::string to_json_line(const ConditionReport& report);

// Every vertex has d(v) >= t.
ConditionReport min_degree_condition(const Digraph& d, int t);

// d(x) + d(y) >= t for every unordered pair of distinct nonadjacent vertices,
// optionally only pairs inside `restrict_to`.
ConditionReport meyniel_like(const Digraph& d, int t,
                             std::optional<VertexMask> restrict_to = {});

// For distinct x, y, z with x, y nonadjacent: x -/-> z implies
// d(x)+d(y)+d+(x)+d-(z) >= 3p-2 and z -/-> x implies
// d(x)+d(y)+d-(x)+d+(z) >= 3p-2. Throws Error(kOrderTooSmall) for p < 4.
ConditionReport manoussakis_triple(const Digraph& d);

// At most one vertex has degree below p. The witness is z: the unique
// low-degree vertex, or the lowest-index vertex of minimum degree when
// there is none. On failure the witness lists every low-degree vertex.
ConditionReport one_exception_degree(const Digraph& d);

// Vertices z such that every other vertex has degree at least p.
VertexMask exceptional_vertex_candidates(const Digraph& d);

// Condition A_l: d+(u) + d-(v) >= a + l for every cross-partition ordered
// pair (u, v) with u -/-> v.
ConditionReport bipartite_condition_A(const BipartiteDigraph& b, int l);

// Largest l for which A_l holds; nullopt if even A_0 fails. With no
// cross-partition non-arc every l works and kUnboundedL is returned.
inline constexpr int kUnboundedL = 1 << 20;
std::optional<int> max_condition_A_level(const BipartiteDigraph& b);

// d(x)+d(y)+d(w)+d(z) >= t for every two distinct nonadjacent pairs {x,y},
// {w,z}. The pairs may share a vertex unless `disjoint` is set.
ConditionReport four_vertex_condition(const Digraph& d, int t,
                                      bool disjoint = false);

enum class ExceptionClass { kNone, kD0, kDpkk, kT5, kC3, kB6 };

std::string_view exception_name(ExceptionClass c);

struct ExceptionMatch {
  ExceptionClass cls = ExceptionClass::kNone;
  // For kDpkk: the smaller admissible k (D_{p-k,k} and D_{k+1,p-k-1} are
  // the same digraph).
  int k = 0;
  bool operator==(const ExceptionMatch&) const = default;
};

// D_0: p odd, an independent set F with (p+1)/2 vertices and every arc
// between F and B = V \ F present in both directions.
std::optional<VertexMask> d0_independent_set(const Digraph& d);

// D_{p-k,k}: two complete digraphs sharing exactly one vertex.
std::optional<int> dpkk_parameter(const Digraph& d);

// First match in the order C3, T5, B6, Dpkk, D0.
ExceptionMatch classify_exception(const Digraph& d);
std::vector<ExceptionMatch> matching_exceptions(const Digraph& d);

}  // namespace hambypass

#endif  // HAMBYPASS_CONDITIONS_H_
