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

#include "hambypass/conditions.h"

#include <algorithm>
#include <limits>
#include <string>

#include "hambypass/error.h"
#include "hambypass/families.h"
#include "hambypass/isomorphism.h"
#include "json.hpp"

namespace hambypass {

std::string to_json_line(const ConditionReport& report) {
  nlohmann::ordered_json j;
  j["condition"] = report.id;
  j["holds"] = report.holds;
  j["witness"] = report.witness;
  if (!report.clause.empty()) j["clause"] = report.clause;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.params) params[key] = value;
  j["params"] = params;
  return j.dump();
}

namespace {

ConditionReport make_report(std::string id) {
  ConditionReport r;
  r.id = std::move(id);
  return r;
}

}  // namespace

ConditionReport min_degree_condition(const Digraph& d, int t) {
  ConditionReport r = make_report("min_degree");
  r.params["t"] = t;
  for (int v = 0; v < d.order(); ++v) {
    if (d.total_degree(v) < t) {
      r.holds = false;
      r.witness = {v};
      r.params["d"] = d.total_degree(v);
      return r;
    }
  }
  return r;
}

ConditionReport meyniel_like(const Digraph& d, int t,
                             std::optional<VertexMask> restrict_to) {
  ConditionReport r = make_report("meyniel_like");
  r.params["t"] = t;
  const VertexMask scope = restrict_to.value_or(d.vertices()) & d.vertices();
  for (int x = 0; x < d.order(); ++x) {
    if (!(scope & bit(x))) continue;
    const VertexMask nonadjacent =
        scope & ~(d.out(x) | d.in(x) | full_mask(x + 1));
    for (int y = x + 1; y < d.order(); ++y) {
      if (!(nonadjacent & bit(y))) continue;
      const int sum = d.total_degree(x) + d.total_degree(y);
      if (sum < t) {
        r.holds = false;
        r.witness = {x, y};
        r.params["sum"] = sum;
        return r;
      }
    }
  }
  return r;
}

ConditionReport manoussakis_triple(const Digraph& d) {
  const int p = d.order();
  if (p < 4) {
    throw Error(ErrorCode::kOrderTooSmall,
                "triple condition needs p >= 4, got " + std::to_string(p));
  }
  ConditionReport r = make_report("manoussakis_triple");
  const int bound = 3 * p - 2;
  r.params["t"] = bound;
  for (int x = 0; x < p; ++x) {
    for (int y = 0; y < p; ++y) {
      if (x == y || d.adjacent(x, y)) continue;
      const int base = d.total_degree(x) + d.total_degree(y);
      for (int z = 0; z < p; ++z) {
        if (z == x || z == y) continue;
        if (!d.has_arc(x, z)) {
          const int sum = base + popcount(d.out(x)) + popcount(d.in(z));
          if (sum < bound) {
            r.holds = false;
            r.witness = {x, y, z};
            r.clause = "no arc x->z";
            r.params["sum"] = sum;
            return r;
          }
        }
        if (!d.has_arc(z, x)) {
          const int sum = base + popcount(d.in(x)) + popcount(d.out(z));
          if (sum < bound) {
            r.holds = false;
            r.witness = {x, y, z};
            r.clause = "no arc z->x";
            r.params["sum"] = sum;
            return r;
          }
        }
      }
    }
  }
  return r;
}

VertexMask exceptional_vertex_candidates(const Digraph& d) {
  const int p = d.order();
  VertexMask low = 0;
  for (int v = 0; v < p; ++v) {
    if (d.total_degree(v) < p) low |= bit(v);
  }
  if (low == 0) return d.vertices();
  if (popcount(low) == 1) return low;
  return 0;
}

ConditionReport one_exception_degree(const Digraph& d) {
  ConditionReport r = make_report("one_exception_degree");
  const int p = d.order();
  r.params["t"] = p;
  VertexMask low = 0;
  for (int v = 0; v < p; ++v) {
    if (d.total_degree(v) < p) low |= bit(v);
  }
  if (popcount(low) >= 2) {
    r.holds = false;
    r.witness = members(low);
    return r;
  }
  int z = 0;
  if (low != 0) {
    z = lowest(low);
  } else {
    for (int v = 1; v < p; ++v) {
      if (d.total_degree(v) < d.total_degree(z)) z = v;
    }
  }
  if (p > 0) {
    r.witness = {z};
    r.params["z"] = z;
    r.params["d_z"] = d.total_degree(z);
  }
  return r;
}

ConditionReport bipartite_condition_A(const BipartiteDigraph& b, int l) {
  if (l < 0) throw Error(ErrorCode::kBadParameters, "l must be >= 0");
  ConditionReport r = make_report("A_l");
  const Digraph& d = b.digraph();
  const int a = b.half_order();
  r.params["a"] = a;
  r.params["l"] = l;
  for (int u = 0; u < d.order(); ++u) {
    const VertexMask non_arcs = b.opposite_side(u) & ~d.out(u);
    for (int v = 0; v < d.order(); ++v) {
      if (!(non_arcs & bit(v))) continue;
      const int sum = popcount(d.out(u)) + popcount(d.in(v));
      if (sum < a + l) {
        r.holds = false;
        r.witness = {u, v};
        r.params["sum"] = sum;
        return r;
      }
    }
  }
  return r;
}

std::optional<int> max_condition_A_level(const BipartiteDigraph& b) {
  const Digraph& d = b.digraph();
  int worst = std::numeric_limits<int>::max();
  for (int u = 0; u < d.order(); ++u) {
    const int out = popcount(d.out(u));
    for_each_vertex(b.opposite_side(u) & ~d.out(u), [&](int v) {
      worst = std::min(worst, out + popcount(d.in(v)));
    });
  }
  if (worst == std::numeric_limits<int>::max()) return kUnboundedL;
  const int l = worst - b.half_order();
  if (l < 0) return std::nullopt;
  return l;
}

ConditionReport four_vertex_condition(const Digraph& d, int t,
                                      bool disjoint) {
  ConditionReport r = make_report("four_vertex");
  r.params["t"] = t;
  r.params["disjoint"] = disjoint ? 1 : 0;
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < d.order(); ++x) {
    for (int y = x + 1; y < d.order(); ++y) {
      if (!d.adjacent(x, y)) pairs.emplace_back(x, y);
    }
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const auto [x, y] = pairs[i];
      const auto [w, z] = pairs[j];
      const bool shared = x == w || x == z || y == w || y == z;
      if (shared && disjoint) continue;
      const int sum = d.total_degree(x) + d.total_degree(y) +
                      d.total_degree(w) + d.total_degree(z);
      if (sum < t) {
        r.holds = false;
        r.witness = {x, y, w, z};
        r.params["sum"] = sum;
        return r;
      }
    }
  }
  return r;
}

std::string_view exception_name(ExceptionClass c) {
  switch (c) {
    case ExceptionClass::kNone: return "None";
    case ExceptionClass::kD0: return "D0";
    case ExceptionClass::kDpkk: return "Dpkk";
    case ExceptionClass::kT5: return "T5";
    case ExceptionClass::kC3: return "C3";
    case ExceptionClass::kB6: return "B6";
  }
  return "?";
}

std::optional<VertexMask> d0_independent_set(const Digraph& d) {
  const int p = d.order();
  if (p < 3 || p % 2 == 0) return std::nullopt;
  const VertexMask all = d.vertices();
  // A vertex f of F is joined both ways to exactly B, so B = N+(f) = N-(f)
  // and F is determined by any one of its members.
  for (int f = 0; f < p; ++f) {
    if (d.out(f) != d.in(f)) continue;
    const VertexMask b = d.out(f);
    const VertexMask fs = all & ~b;
    if (popcount(fs) != (p + 1) / 2) continue;
    bool ok = true;
    for_each_vertex(fs, [&](int v) {
      ok = ok && d.out(v) == b && d.in(v) == b;
    });
    if (ok) return fs;
  }
  return std::nullopt;
}

std::optional<int> dpkk_parameter(const Digraph& d) {
  const int p = d.order();
  if (p < 3) return std::nullopt;
  const VertexMask all = d.vertices();
  for (int c = 0; c < p; ++c) {
    const VertexMask rest = all & ~bit(c);
    if (d.out(c) != rest || d.in(c) != rest) continue;
    // Weak component of the lowest remaining vertex inside D - c.
    VertexMask block = bit(lowest(rest));
    VertexMask frontier = block;
    while (frontier != 0) {
      VertexMask next = 0;
      for_each_vertex(frontier, [&](int u) { next |= d.out(u) | d.in(u); });
      next &= rest & ~block;
      block |= next;
      frontier = next;
    }
    const VertexMask other = rest & ~block;
    if (other == 0) continue;
    bool ok = true;
    for (VertexMask part : {block, other}) {
      const VertexMask with_c = part | bit(c);
      for_each_vertex(part, [&](int u) {
        ok = ok && d.out(u) == (with_c & ~bit(u)) &&
             d.in(u) == (with_c & ~bit(u));
      });
    }
    if (ok) return std::min(popcount(block), popcount(other));
  }
  return std::nullopt;
}

namespace {

bool is_directed_triangle(const Digraph& d) {
  return d.order() == 3 && d.arc_count() == 3 && is_strong(d);
}

}  // namespace

std::vector<ExceptionMatch> matching_exceptions(const Digraph& d) {
  std::vector<ExceptionMatch> found;
  if (is_directed_triangle(d)) found.push_back({ExceptionClass::kC3, 0});
  if (d.order() == 5 && isomorphic(d, gen_T5())) {
    found.push_back({ExceptionClass::kT5, 0});
  }
  if (d.order() == 6 && d.arc_count() == b6_fixture().digraph().arc_count() &&
      isomorphic(d, b6_fixture().digraph())) {
    found.push_back({ExceptionClass::kB6, 0});
  }
  if (const auto k = dpkk_parameter(d)) {
    found.push_back({ExceptionClass::kDpkk, *k});
  }
  if (d0_independent_set(d)) found.push_back({ExceptionClass::kD0, 0});
  return found;
}

ExceptionMatch classify_exception(const Digraph& d) {
  const auto found = matching_exceptions(d);
  if (found.empty()) return {};
  return found.front();
}

}  // namespace hambypass
