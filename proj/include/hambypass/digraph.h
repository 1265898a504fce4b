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

#ifndef HAMBYPASS_DIGRAPH_H_
#define HAMBYPASS_DIGRAPH_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hambypass {

// Vertex sets are bitmasks over vertex indices; bit v stands for vertex v.
using VertexMask = std::uint64_t;

inline constexpr int kMaxOrder = 64;

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

inline constexpr VertexMask full_mask(int order) {
  return order >= kMaxOrder ? ~VertexMask{0} : bit(order) - 1;
}

inline int popcount(VertexMask m) { return std::popcount(m); }

inline int lowest(VertexMask m) { return std::countr_zero(m); }

VertexMask mask_of(std::initializer_list<int> vertices);
VertexMask mask_of(std::span<const int> vertices);
std::vector<int> members(VertexMask m);

// Calls fn(v) for every vertex v in m, lowest index first.
template <typename Fn>
inline void for_each_vertex(VertexMask m, Fn&& fn) {
  while (m != 0) {
    const int v = lowest(m);
    m &= m - 1;
    fn(v);
  }
}

struct Arc {
  int from = 0;
  int to = 0;
  auto operator<=>(const Arc&) const = default;
};

struct Degree {
  int out = 0;
  int in = 0;
  int total = 0;
  bool operator==(const Degree&) const = default;
};

// A finite loop-free digraph without multiple arcs. Opposite arcs (2-cycles)
// are allowed. Vertices are 0-based indices; optional labels are used only
// for display and serialization. Immutable once built.
class Digraph {
 public:
  Digraph() = default;

  // Throws Error(kOutOfRange) for an endpoint outside [0, order) and
  // Error(kLoopArc) for (u, u). Duplicate pairs collapse to one arc.
  static Digraph build(int order, std::span<const Arc> arcs,
                       std::vector<std::string> labels = {});
  static Digraph build(int order, std::initializer_list<Arc> arcs,
                       std::vector<std::string> labels = {});

  // Fast path for enumeration: out_masks[u] is the out-neighbourhood of u.
  static Digraph from_out_masks(std::span<const VertexMask> out_masks);

  int order() const { return static_cast<int>(out_.size()); }
  int arc_count() const { return arc_count_; }
  VertexMask vertices() const { return full_mask(order()); }

  bool has_arc(int u, int v) const { return (out_[u] >> v) & 1U; }
  bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

  VertexMask out(int u) const { return out_[u]; }
  VertexMask in(int u) const { return in_[u]; }

  Degree degree(int u) const;
  // d(u, X): neighbours counted only inside X.
  Degree degree(int u, VertexMask within) const;
  int total_degree(int u) const { return popcount(out_[u]) + popcount(in_[u]); }

  std::vector<Arc> arcs() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int v) const;
  Digraph with_labels(std::vector<std::string> labels) const;

  // Structural equality: same order and same arc set. Labels are ignored.
  bool operator==(const Digraph& other) const {
    return out_ == other.out_;
  }

 private:
  std::vector<VertexMask> out_;
  std::vector<VertexMask> in_;
  std::vector<std::string> labels_;
  int arc_count_ = 0;
};

// A balanced bipartite digraph. Every arc crosses the partition and both
// partite sets have half_order() vertices.
class BipartiteDigraph {
 public:
  BipartiteDigraph() = default;

  // Throws Error(kNotBipartite) if the sides are unbalanced, do not cover
  // V(D), or an arc lies inside one side.
  static BipartiteDigraph build(Digraph d, VertexMask x_side);

  // X = {0, ..., a-1}, Y = {a, ..., 2a-1}.
  static BipartiteDigraph standard(int half_order, std::span<const Arc> arcs,
                                   std::vector<std::string> labels = {});

  const Digraph& digraph() const { return digraph_; }
  int half_order() const { return digraph_.order() / 2; }
  VertexMask x_side() const { return x_side_; }
  VertexMask y_side() const { return digraph_.vertices() & ~x_side_; }
  bool in_x(int v) const { return (x_side_ >> v) & 1U; }
  // Vertices of the partite set that does not contain v.
  VertexMask opposite_side(int v) const { return in_x(v) ? y_side() : x_side_; }

 private:
  BipartiteDigraph(Digraph d, VertexMask x_side)
      : digraph_(std::move(d)), x_side_(x_side) {}

  Digraph digraph_;
  VertexMask x_side_ = 0;
};

enum class WalkKind { kPath, kCycle, kBypass };

std::string_view walk_kind_name(WalkKind kind);

// An ordered sequence of distinct vertices. A bypass is a path of at least
// three vertices whose first vertex dominates its last one.
struct Walk {
  std::vector<int> vertices;
  WalkKind kind = WalkKind::kPath;

  int size() const { return static_cast<int>(vertices.size()); }
  bool hamiltonian(const Digraph& d) const { return size() == d.order(); }
  bool operator==(const Walk&) const = default;
};

// Re-checks every arc of w (and the closing arc or chord) against d.
bool is_valid(const Digraph& d, const Walk& w);

std::string to_string(const Walk& w);

// Checked degree query; throws Error(kOutOfRange) if u or `within` leaves
// V(D). `within` defaults to V(D).
Degree degree(const Digraph& d, int u,
              std::optional<VertexMask> within = std::nullopt);

bool is_strong(const Digraph& d);
// Strong connectivity of the subdigraph induced by `within`. An empty or
// single-vertex set counts as strong.
bool is_strong_within(const Digraph& d, VertexMask within);
// Vertices reachable from v by paths inside `within` (v included).
VertexMask reachable_from(const Digraph& d, int v, VertexMask within);
VertexMask reaching_to(const Digraph& d, int v, VertexMask within);

// |V(D)| >= k + 1 and D - X is strong for every X with |X| <= k - 1.
bool is_k_strong(const Digraph& d, int k);

struct InducedSubdigraph {
  Digraph digraph;
  // index_map[i] is the vertex of the host digraph that became vertex i.
  std::vector<int> index_map;
};

InducedSubdigraph induced(const Digraph& d, VertexMask within);
Digraph converse(const Digraph& d);

// Degree sequence (out, in) sorted; equal multisets are necessary for
// isomorphism.
std::vector<std::pair<int, int>> degree_signature(const Digraph& d);

bool is_tournament(const Digraph& d);
bool is_complete(const Digraph& d);

// Relabels vertex v to perm[v].
Digraph permute(const Digraph& d, std::span<const int> perm);

}  // namespace hambypass

#endif  // HAMBYPASS_DIGRAPH_H_
