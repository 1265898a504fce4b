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

#include "hambypass/lemmas.h"

#include <algorithm>
#include <string>

#include "hambypass/error.h"

namespace hambypass {

namespace {

std::string arc_name(int u, int v) {
  return std::to_string(u) + "->" + std::to_string(v);
}

void check_vertex(const Digraph& d, int v) {
  if (v < 0 || v >= d.order()) {
    throw Error(ErrorCode::kOutOfRange, "vertex " + std::to_string(v));
  }
}

VertexMask require_walk(const Digraph& d, std::span<const int> vertices,
                        WalkKind kind, int min_size, const char* what) {
  for (int v : vertices) check_vertex(d, v);
  Walk w{std::vector<int>(vertices.begin(), vertices.end()), kind};
  if (w.size() < min_size || !is_valid(d, w)) {
    throw Error(ErrorCode::kPreconditionFailed,
                std::string(what) + " [" + to_string(w) + "] is not valid");
  }
  return mask_of(vertices);
}

}  // namespace

InsertionConditions insertion_conditions(const Digraph& d,
                                         std::span<const int> path, int x) {
  check_vertex(d, x);
  const VertexMask on_path = require_walk(d, path, WalkKind::kPath, 2, "path");
  if (on_path & bit(x)) {
    throw Error(ErrorCode::kXOnPath, "vertex " + std::to_string(x));
  }
  InsertionConditions c;
  c.m = static_cast<int>(path.size());
  c.degree_to_path = d.degree(x, on_path).total;
  const bool no_x_to_first = !d.has_arc(x, path.front());
  const bool no_last_to_x = !d.has_arc(path.back(), x);
  c.cond_i = c.degree_to_path >= c.m + 2;
  c.cond_ii = c.degree_to_path >= c.m + 1 && (no_x_to_first || no_last_to_x);
  c.cond_iii = c.degree_to_path >= c.m && no_x_to_first && no_last_to_x;
  return c;
}

std::optional<InsertionWitness> insert_vertex(const Digraph& d,
                                              std::span<const int> path,
                                              int x) {
  insertion_conditions(d, path, x);  // validates the inputs
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (d.has_arc(path[i], x) && d.has_arc(x, path[i + 1])) {
      InsertionWitness w;
      w.position = static_cast<int>(i);
      w.result.kind = WalkKind::kPath;
      w.result.vertices.assign(path.begin(), path.begin() + i + 1);
      w.result.vertices.push_back(x);
      w.result.vertices.insert(w.result.vertices.end(), path.begin() + i + 1,
                               path.end());
      return w;
    }
  }
  return std::nullopt;
}

namespace {

// A cycle x u_1 ... u_{k-1} x inside `within`.
bool cycle_of_length(const Digraph& d, int x, int k, VertexMask within,
                     std::vector<int>& path, VertexMask used) {
  const int tail = path.back();
  if (static_cast<int>(path.size()) == k) return d.has_arc(tail, x);
  VertexMask candidates = d.out(tail) & within & ~used;
  while (candidates != 0) {
    const int c = lowest(candidates);
    candidates &= candidates - 1;
    path.push_back(c);
    if (cycle_of_length(d, x, k, within, path, used | bit(c))) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

CyclesThrough cycles_through(const Digraph& d, std::span<const int> cycle,
                             int x) {
  check_vertex(d, x);
  const VertexMask on_cycle =
      require_walk(d, cycle, WalkKind::kCycle, 2, "cycle");
  if (on_cycle & bit(x)) {
    throw Error(ErrorCode::kXOnCycle, "vertex " + std::to_string(x));
  }
  CyclesThrough result;
  result.m = static_cast<int>(cycle.size());
  result.degree_to_cycle = d.degree(x, on_cycle).total;
  result.hypothesis_holds = result.degree_to_cycle >= result.m + 1;
  const VertexMask within = on_cycle | bit(x);
  for (int k = 2; k <= result.m + 1; ++k) {
    std::vector<int> path{x};
    if (cycle_of_length(d, x, k, within, path, bit(x))) {
      result.cycles.emplace(k, Walk{path, WalkKind::kCycle});
    }
  }
  return result;
}

Walk merge_paths(const Digraph& d, std::span<const int> p,
                 std::span<const int> q, bool q_is_cycle, int k) {
  const VertexMask p_set = require_walk(d, p, WalkKind::kPath, 1, "P");
  const VertexMask q_set = require_walk(
      d, q, q_is_cycle ? WalkKind::kCycle : WalkKind::kPath, 2, "Q");
  if (p_set & q_set) {
    throw Error(ErrorCode::kPreconditionFailed, "P and Q share a vertex");
  }
  const int s = static_cast<int>(p.size());
  const int t = static_cast<int>(q.size());
  if (k < 1 || k > s) {
    throw Error(ErrorCode::kBadParameters,
                "k must lie in [1, " + std::to_string(s) + "]");
  }
  // Arcs of Q by their tail index j: v_j -> v_{j+1}, plus v_t -> v_1 for a
  // cycle.
  const int q_arcs = q_is_cycle ? t : t - 1;
  const auto head = [&](int j) { return q[(j + 1) % t]; };
  std::vector<int> slot(s, -1);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < q_arcs; ++j) {
      if (d.has_arc(q[j], p[i]) && d.has_arc(p[i], head(j))) {
        slot[i] = j;
        break;
      }
    }
    if (slot[i] < 0) {
      throw Error(ErrorCode::kHypothesisFailed,
                  "u_" + std::to_string(i + 1) + " = vertex " +
                      std::to_string(p[i]) + " has no insertion arc on Q");
    }
  }
  // block[j] is the run of P spliced into the arc v_j -> v_{j+1}.
  std::vector<std::vector<int>> block(q_arcs);
  int next = 0;
  while (next < k) {
    const int j = slot[next];
    int last = next;
    for (int m = next; m < k; ++m) {
      if (d.has_arc(p[m], head(j))) last = m;
    }
    block[j].assign(p.begin() + next, p.begin() + last + 1);
    next = last + 1;
  }
  Walk w;
  w.kind = q_is_cycle ? WalkKind::kCycle : WalkKind::kPath;
  for (int j = 0; j < t; ++j) {
    w.vertices.push_back(q[j]);
    if (j < q_arcs) {
      w.vertices.insert(w.vertices.end(), block[j].begin(), block[j].end());
    }
  }
  if (!is_valid(d, w) || w.size() != t + k) {
    throw Error(ErrorCode::kPreconditionFailed,
                "merged walk [" + to_string(w) + "] failed validation");
  }
  return w;
}

namespace {

struct Relabeled {
  std::vector<int> x;  // x[1..a]
  std::vector<int> y;  // y[1..a]
};

Relabeled relabel(std::span<const int> cycle, int start) {
  const int n = static_cast<int>(cycle.size());
  const int a = n / 2;
  Relabeled r{std::vector<int>(a + 1), std::vector<int>(a + 1)};
  for (int i = 1; i <= a; ++i) {
    r.x[i] = cycle[(start + 2 * i - 2) % n];
    r.y[i] = cycle[(start + 2 * i - 1) % n];
  }
  return r;
}

void require_hamiltonian_cycle(const BipartiteDigraph& b,
                               std::span<const int> cycle) {
  require_walk(b.digraph(), cycle, WalkKind::kCycle, 2, "cycle");
  if (static_cast<int>(cycle.size()) != b.digraph().order()) {
    throw Error(ErrorCode::kPreconditionFailed, "cycle is not Hamiltonian");
  }
}

}  // namespace

std::optional<ChordSpec> chord_scan(const BipartiteDigraph& b,
                                    std::span<const int> cycle) {
  require_hamiltonian_cycle(b, cycle);
  const Digraph& d = b.digraph();
  const int n = d.order();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[cycle[i]] = i;
  std::optional<ChordSpec> best;
  for (int head_pos = 0; head_pos < n; ++head_pos) {
    const int head = cycle[head_pos];
    for_each_vertex(d.in(head), [&](int tail) {
      const int span = ((pos[tail] - head_pos) % n + n) % n;
      if (span == n - 1) return;  // the cycle arc into head
      const int k = (span + 1) / 2;
      if (!best || k < best->k) {
        best = ChordSpec{head_pos, k,
                         b.in_x(head) ? ChordOrientation::kYtoX
                                      : ChordOrientation::kXtoY};
      }
    });
  }
  return best;
}

std::optional<int> find_chord_partner(const BipartiteDigraph& b,
                                      std::span<const int> cycle,
                                      const ChordSpec& chord) {
  require_hamiltonian_cycle(b, cycle);
  const Digraph& d = b.digraph();
  const int a = b.half_order();
  const Relabeled r = relabel(cycle, chord.start);
  for (int j = chord.k + 1; j <= a; ++j) {
    if (d.has_arc(r.x[j], r.y[1]) && d.has_arc(r.x[chord.k], r.y[j])) {
      return j;
    }
  }
  return std::nullopt;
}

Walk bipartite_bypass_from_chord(const BipartiteDigraph& b,
                                 std::span<const int> cycle,
                                 const ChordSpec& chord, int j) {
  require_hamiltonian_cycle(b, cycle);
  const Digraph& d = b.digraph();
  const int a = b.half_order();
  const int k = chord.k;
  if (k < 1 || k > a - 1) {
    throw Error(ErrorCode::kPreconditionFailed,
                "chord offset k=" + std::to_string(k) + " outside [1, a-1]");
  }
  const Relabeled r = relabel(cycle, chord.start);
  const auto need = [&](int u, int v) {
    if (!d.has_arc(u, v)) {
      throw Error(ErrorCode::kPreconditionFailed,
                  "missing arc " + arc_name(u, v));
    }
  };
  need(r.y[k], r.x[1]);
  Walk w;
  w.kind = WalkKind::kBypass;
  if (k == 1) {
    for (int m = 1; m < 2 * a; ++m) {
      w.vertices.push_back(cycle[(chord.start + m) % (2 * a)]);
    }
    w.vertices.push_back(r.x[1]);
  } else {
    if (j < k + 1 || j > a) {
      throw Error(ErrorCode::kPreconditionFailed,
                  "j=" + std::to_string(j) + " outside [k+1, a]");
    }
    need(r.x[j], r.y[1]);
    need(r.x[k], r.y[j]);
    // y_k x_{k+1} y_{k+1} ... x_j
    w.vertices.push_back(r.y[k]);
    for (int i = k + 1; i <= j; ++i) {
      w.vertices.push_back(r.x[i]);
      if (i < j) w.vertices.push_back(r.y[i]);
    }
    // y_1 x_2 y_2 ... x_k
    w.vertices.push_back(r.y[1]);
    for (int i = 2; i <= k; ++i) {
      w.vertices.push_back(r.x[i]);
      if (i < k) w.vertices.push_back(r.y[i]);
    }
    // y_j x_{j+1} y_{j+1} ... y_a x_1
    w.vertices.push_back(r.y[j]);
    for (int i = j + 1; i <= a; ++i) {
      w.vertices.push_back(r.x[i]);
      w.vertices.push_back(r.y[i]);
    }
    w.vertices.push_back(r.x[1]);
  }
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    need(w.vertices[i], w.vertices[i + 1]);
  }
  if (w.size() != 2 * a || !is_valid(d, w)) {
    throw Error(ErrorCode::kPreconditionFailed,
                "constructed walk [" + to_string(w) + "] is not a bypass");
  }
  return w;
}

}  // namespace hambypass
