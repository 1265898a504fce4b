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

// Brute-force reference implementations used as test oracles. They share no
// code with the library beyond the Digraph container.

#ifndef HAMBYPASS_TESTS_ORACLES_H_
#define HAMBYPASS_TESTS_ORACLES_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hambypass/digraph.h"

namespace hambypass::oracle {

inline bool arc(const Digraph& d, int u, int v) { return d.has_arc(u, v); }

inline bool is_path_sequence(const Digraph& d, const std::vector<int>& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (!arc(d, s[i], s[i + 1])) return false;
  }
  return true;
}

// Tries every vertex ordering.
inline bool has_hamiltonian_cycle(const Digraph& d) {
  const int p = d.order();
  if (p < 2) return false;
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  // Fixing vertex 0 first loses nothing for cycles.
  do {
    if (is_path_sequence(d, perm) && arc(d, perm[p - 1], perm[0])) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

inline bool has_hamiltonian_path(const Digraph& d, int from = -1, int to = -1) {
  const int p = d.order();
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (from >= 0 && perm[0] != from) continue;
    if (to >= 0 && perm[p - 1] != to) continue;
    if (is_path_sequence(d, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool has_bypass(const Digraph& d) {
  const int p = d.order();
  if (p < 3) return false;
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (arc(d, perm[0], perm[p - 1]) && is_path_sequence(d, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Every simple cycle (length >= 2) as a vertex list starting at its
// smallest vertex.
inline std::vector<std::vector<int>> all_cycles(const Digraph& d) {
  std::vector<std::vector<int>> out;
  const int p = d.order();
  std::vector<int> stack;
  std::vector<bool> used(p, false);
  auto dfs = [&](auto&& self, int start, int u) -> void {
    for (int v = start; v < p; ++v) {
      if (!arc(d, u, v)) continue;
      if (v == start) {
        if (stack.size() >= 2) out.push_back(stack);
        continue;
      }
      if (used[v]) continue;
      used[v] = true;
      stack.push_back(v);
      self(self, start, v);
      stack.pop_back();
      used[v] = false;
    }
  };
  for (int s = 0; s < p; ++s) {
    stack = {s};
    used.assign(p, false);
    used[s] = true;
    dfs(dfs, s, s);
  }
  return out;
}

// Transitive closure by repeated squaring of the reachability relation.
inline std::vector<std::vector<bool>> reach(const Digraph& d, VertexMask alive) {
  const int p = d.order();
  std::vector<std::vector<bool>> r(p, std::vector<bool>(p, false));
  for (int u = 0; u < p; ++u) {
    if (!(alive >> u & 1)) continue;
    r[u][u] = true;
    for (int v = 0; v < p; ++v) {
      if ((alive >> v & 1) && arc(d, u, v)) r[u][v] = true;
    }
  }
  for (int k = 0; k < p; ++k) {
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) {
        if (r[i][k] && r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

inline bool strong_within(const Digraph& d, VertexMask alive) {
  const auto r = reach(d, alive);
  for (int u = 0; u < d.order(); ++u) {
    for (int v = 0; v < d.order(); ++v) {
      if ((alive >> u & 1) && (alive >> v & 1) && !r[u][v]) return false;
    }
  }
  return true;
}

// k-strong: more than k vertices and strong after deleting any k-1.
inline bool k_strong(const Digraph& d, int k) {
  const int p = d.order();
  if (p <= k) return false;
  const VertexMask all = (VertexMask{1} << p) - 1;
  for (VertexMask removed = 0; removed <= all; ++removed) {
    if (std::popcount(removed) > k - 1) continue;
    if (!strong_within(d, all & ~removed)) return false;
  }
  return true;
}

inline int degree(const Digraph& d, int v) {
  int n = 0;
  for (int u = 0; u < d.order(); ++u) {
    if (u != v) n += arc(d, u, v) + arc(d, v, u);
  }
  return n;
}

inline Digraph random_digraph(int p, double q, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(q);
  std::vector<Arc> arcs;
  for (int u = 0; u < p; ++u) {
    for (int v = 0; v < p; ++v) {
      if (u != v && coin(rng)) arcs.push_back({u, v});
    }
  }
  return Digraph::build(p, arcs);
}

}  // namespace hambypass::oracle

#endif  // HAMBYPASS_TESTS_ORACLES_H_
