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

#include "hambypass/digraph.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include "hambypass/error.h"

namespace hambypass {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kLoopArc: return "LoopArc";
    case ErrorCode::kSizeLimit: return "SizeLimit";
    case ErrorCode::kNotBipartite: return "NotBipartite";
    case ErrorCode::kOrderTooSmall: return "OrderTooSmall";
    case ErrorCode::kXOnPath: return "XOnPath";
    case ErrorCode::kXOnCycle: return "XOnCycle";
    case ErrorCode::kHypothesisFailed: return "HypothesisFailed";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kBadParameters: return "BadParameters";
    case ErrorCode::kDerivationFailed: return "DerivationFailed";
    case ErrorCode::kScopeMismatch: return "ScopeMismatch";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

VertexMask mask_of(std::initializer_list<int> vertices) {
  return mask_of(std::span<const int>(vertices.begin(), vertices.size()));
}

VertexMask mask_of(std::span<const int> vertices) {
  VertexMask m = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxOrder) {
      throw Error(ErrorCode::kOutOfRange, "vertex " + std::to_string(v));
    }
    m |= bit(v);
  }
  return m;
}

std::vector<int> members(VertexMask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  for_each_vertex(m, [&](int v) { out.push_back(v); });
  return out;
}

Digraph Digraph::build(int order, std::span<const Arc> arcs,
                       std::vector<std::string> labels) {
  if (order < 0 || order > kMaxOrder) {
    throw Error(ErrorCode::kOutOfRange,
                "order " + std::to_string(order) + " outside [0, 64]");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != order) {
    throw Error(ErrorCode::kBadParameters, "label count does not match order");
  }
  std::vector<VertexMask> out(order, 0);
  for (const Arc& a : arcs) {
    if (a.from < 0 || a.from >= order || a.to < 0 || a.to >= order) {
      throw Error(ErrorCode::kOutOfRange,
                  "arc (" + std::to_string(a.from) + "," +
                      std::to_string(a.to) + ") with order " +
                      std::to_string(order));
    }
    if (a.from == a.to) {
      throw Error(ErrorCode::kLoopArc, "(" + std::to_string(a.from) + "," +
                                           std::to_string(a.to) + ")");
    }
    out[a.from] |= bit(a.to);
  }
  Digraph d = from_out_masks(out);
  d.labels_ = std::move(labels);
  return d;
}

Digraph Digraph::build(int order, std::initializer_list<Arc> arcs,
                       std::vector<std::string> labels) {
  return build(order, std::span<const Arc>(arcs.begin(), arcs.size()),
               std::move(labels));
}

Digraph Digraph::from_out_masks(std::span<const VertexMask> out_masks) {
  const int order = static_cast<int>(out_masks.size());
  if (order > kMaxOrder) {
    throw Error(ErrorCode::kOutOfRange, "order above 64");
  }
  Digraph d;
  d.out_.assign(out_masks.begin(), out_masks.end());
  d.in_.assign(order, 0);
  const VertexMask all = full_mask(order);
  for (int u = 0; u < order; ++u) {
    if (d.out_[u] & ~all) {
      throw Error(ErrorCode::kOutOfRange,
                  "out-mask of " + std::to_string(u) + " leaves V(D)");
    }
    if (d.out_[u] & bit(u)) {
      throw Error(ErrorCode::kLoopArc, "(" + std::to_string(u) + "," +
                                           std::to_string(u) + ")");
    }
    d.arc_count_ += popcount(d.out_[u]);
    for_each_vertex(d.out_[u], [&](int v) { d.in_[v] |= bit(u); });
  }
  return d;
}

Degree Digraph::degree(int u) const {
  const int o = popcount(out_[u]);
  const int i = popcount(in_[u]);
  return {o, i, o + i};
}

Degree Digraph::degree(int u, VertexMask within) const {
  const int o = popcount(out_[u] & within);
  const int i = popcount(in_[u] & within);
  return {o, i, o + i};
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (int u = 0; u < order(); ++u) {
    for_each_vertex(out_[u], [&](int v) { result.push_back({u, v}); });
  }
  return result;
}

std::string Digraph::label(int v) const {
  if (!labels_.empty()) return labels_[v];
  return std::to_string(v);
}

Digraph Digraph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && static_cast<int>(labels.size()) != order()) {
    throw Error(ErrorCode::kBadParameters, "label count does not match order");
  }
  Digraph d = *this;
  d.labels_ = std::move(labels);
  return d;
}

BipartiteDigraph BipartiteDigraph::build(Digraph d, VertexMask x_side) {
  const VertexMask all = d.vertices();
  if (x_side & ~all) {
    throw Error(ErrorCode::kNotBipartite, "partite set leaves V(D)");
  }
  const VertexMask y_side = all & ~x_side;
  if (popcount(x_side) != popcount(y_side) || d.order() == 0) {
    throw Error(ErrorCode::kNotBipartite,
                "partite sets of sizes " + std::to_string(popcount(x_side)) +
                    " and " + std::to_string(popcount(y_side)));
  }
  for (int u = 0; u < d.order(); ++u) {
    const VertexMask same = (x_side & bit(u)) ? x_side : y_side;
    if (d.out(u) & same) {
      throw Error(ErrorCode::kNotBipartite,
                  "arc (" + std::to_string(u) + "," +
                      std::to_string(lowest(d.out(u) & same)) +
                      ") inside a partite set");
    }
  }
  return BipartiteDigraph(std::move(d), x_side);
}

BipartiteDigraph BipartiteDigraph::standard(int half_order,
                                            std::span<const Arc> arcs,
                                            std::vector<std::string> labels) {
  return build(Digraph::build(2 * half_order, arcs, std::move(labels)),
               full_mask(half_order));
}

std::string_view walk_kind_name(WalkKind kind) {
  switch (kind) {
    case WalkKind::kPath: return "path";
    case WalkKind::kCycle: return "cycle";
    case WalkKind::kBypass: return "bypass";
  }
  return "?";
}

bool is_valid(const Digraph& d, const Walk& w) {
  const int n = w.size();
  if (n == 0) return false;
  VertexMask seen = 0;
  for (int v : w.vertices) {
    if (v < 0 || v >= d.order() || (seen & bit(v))) return false;
    seen |= bit(v);
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (!d.has_arc(w.vertices[i], w.vertices[i + 1])) return false;
  }
  switch (w.kind) {
    case WalkKind::kPath:
      return true;
    case WalkKind::kCycle:
      return n >= 2 && d.has_arc(w.vertices.back(), w.vertices.front());
    case WalkKind::kBypass:
      return n >= 3 && d.has_arc(w.vertices.front(), w.vertices.back());
  }
  return false;
}

std::string to_string(const Walk& w) {
  std::ostringstream os;
  for (int i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << w.vertices[i];
  }
  return os.str();
}

Degree degree(const Digraph& d, int u, std::optional<VertexMask> within) {
  if (u < 0 || u >= d.order()) {
    throw Error(ErrorCode::kOutOfRange, "vertex " + std::to_string(u));
  }
  const VertexMask x = within.value_or(d.vertices());
  if (x & ~d.vertices()) {
    throw Error(ErrorCode::kOutOfRange, "restriction set leaves V(D)");
  }
  return d.degree(u, x);
}

VertexMask reachable_from(const Digraph& d, int v, VertexMask within) {
  VertexMask seen = bit(v);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](int u) { next |= d.out(u); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

VertexMask reaching_to(const Digraph& d, int v, VertexMask within) {
  VertexMask seen = bit(v);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](int u) { next |= d.in(u); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_strong_within(const Digraph& d, VertexMask within) {
  if (popcount(within) <= 1) return true;
  const int root = lowest(within);
  return reachable_from(d, root, within) == within &&
         reaching_to(d, root, within) == within;
}

bool is_strong(const Digraph& d) { return is_strong_within(d, d.vertices()); }

namespace {

// Visits every subset of `pool` with exactly `size` elements in increasing
// bitmask order; stops early when fn returns false.
template <typename Fn>
bool for_each_subset_of_size(VertexMask pool, int size, Fn&& fn) {
  const std::vector<int> v = members(pool);
  const int n = static_cast<int>(v.size());
  if (size > n) return true;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    VertexMask m = 0;
    for (int i : idx) m |= bit(v[i]);
    if (!fn(m)) return false;
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool is_k_strong(const Digraph& d, int k) {
  if (k < 1) {
    throw Error(ErrorCode::kBadParameters, "k must be positive");
  }
  if (d.order() < k + 1) return false;
  const VertexMask all = d.vertices();
  for (int removed = 0; removed <= k - 1; ++removed) {
    const bool ok = for_each_subset_of_size(all, removed, [&](VertexMask x) {
      return is_strong_within(d, all & ~x);
    });
    if (!ok) return false;
  }
  return true;
}

InducedSubdigraph induced(const Digraph& d, VertexMask within) {
  if (within & ~d.vertices()) {
    throw Error(ErrorCode::kOutOfRange, "vertex set leaves V(D)");
  }
  InducedSubdigraph result;
  result.index_map = members(within);
  const int n = static_cast<int>(result.index_map.size());
  std::vector<int> position(d.order(), -1);
  for (int i = 0; i < n; ++i) position[result.index_map[i]] = i;
  std::vector<VertexMask> out(n, 0);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    const int u = result.index_map[i];
    for_each_vertex(d.out(u) & within,
                    [&](int v) { out[i] |= bit(position[v]); });
    if (d.has_labels()) labels.push_back(d.label(u));
  }
  result.digraph = Digraph::from_out_masks(out).with_labels(std::move(labels));
  return result;
}

Digraph converse(const Digraph& d) {
  std::vector<VertexMask> out(d.order());
  for (int u = 0; u < d.order(); ++u) out[u] = d.in(u);
  return Digraph::from_out_masks(out).with_labels(d.labels());
}

std::vector<std::pair<int, int>> degree_signature(const Digraph& d) {
  std::vector<std::pair<int, int>> sig(d.order());
  for (int u = 0; u < d.order(); ++u) {
    sig[u] = {popcount(d.out(u)), popcount(d.in(u))};
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

bool is_tournament(const Digraph& d) {
  for (int u = 0; u < d.order(); ++u) {
    const VertexMask others = d.vertices() & ~bit(u);
    if ((d.out(u) | d.in(u)) != others || (d.out(u) & d.in(u)) != 0) {
      return false;
    }
  }
  return true;
}

bool is_complete(const Digraph& d) {
  const int p = d.order();
  return d.arc_count() == p * (p - 1);
}

Digraph permute(const Digraph& d, std::span<const int> perm) {
  std::vector<VertexMask> out(d.order(), 0);
  for (int u = 0; u < d.order(); ++u) {
    for_each_vertex(d.out(u), [&](int v) { out[perm[u]] |= bit(perm[v]); });
  }
  return Digraph::from_out_masks(out);
}

}  // namespace hambypass
