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

#include "hambypass/families.h"

#include <algorithm>
#include <sstream>
#include <string>

#include "hambypass/conditions.h"
#include "hambypass/error.h"
#include "hambypass/io.h"
#include "hambypass/isomorphism.h"

namespace hambypass {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::kBadParameters, what);
}

void add_complete(std::vector<Arc>& arcs, std::span<const int> vertices) {
  for (int u : vertices) {
    for (int v : vertices) {
      if (u != v) arcs.push_back({u, v});
    }
  }
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kD0: return "D0";
    case Family::kDpkk: return "Dpkk";
    case Family::kT5: return "T5";
    case Family::kHn: return "Hn";
    case Family::kDnq: return "Dnq";
    case Family::kComplete: return "Complete";
    case Family::kCycle: return "Cycle";
    case Family::kB6: return "B6";
    case Family::kB8: return "B8";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::kD0, Family::kDpkk, Family::kT5, Family::kHn,
                   Family::kDnq, Family::kComplete, Family::kCycle,
                   Family::kB6, Family::kB8}) {
    if (family_name(f) == name) return f;
  }
  bad("unknown family '" + std::string(name) + "'");
}

Digraph gen_complete(int m) {
  if (m < 1 || m > kMaxOrder) bad("Complete needs m in [1,64]");
  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;
  std::vector<Arc> arcs;
  add_complete(arcs, all);
  return Digraph::build(m, arcs);
}

Digraph gen_cycle(int n) {
  if (n < 2 || n > kMaxOrder) bad("Cycle needs n in [2,64]");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return Digraph::build(n, arcs);
}

Digraph gen_T5() {
  // x_1..x_4 are 0..3, y is 4.
  constexpr int x1 = 0, x2 = 1, x3 = 2, x4 = 3, y = 4;
  return Digraph::build(5,
                        {{x1, x2}, {x2, x3}, {x3, x4}, {x4, x1}, {x1, y},
                         {x3, y}, {y, x2}, {y, x4}, {x1, x3}, {x2, x4}},
                        {"x1", "x2", "x3", "x4", "y"});
}

Digraph gen_D0(int p, std::span<const Arc> b_arcs) {
  if (p < 3 || p % 2 == 0) bad("D0 needs odd p >= 3");
  const int f = (p + 1) / 2;
  const int b = p - f;
  std::vector<Arc> arcs;
  std::vector<std::string> labels;
  for (int i = 0; i < f; ++i) labels.push_back("f" + std::to_string(i + 1));
  for (int j = 0; j < b; ++j) labels.push_back("b" + std::to_string(j + 1));
  for (int u = 0; u < f; ++u) {
    for (int v = f; v < p; ++v) {
      arcs.push_back({u, v});
      arcs.push_back({v, u});
    }
  }
  for (const Arc& a : b_arcs) {
    if (a.from < 0 || a.from >= b || a.to < 0 || a.to >= b) {
      bad("D0 B-subdigraph arc outside [0," + std::to_string(b) + ")");
    }
    arcs.push_back({f + a.from, f + a.to});
  }
  return Digraph::build(p, arcs, std::move(labels));
}

Digraph gen_D0_complete_b(int p) {
  if (p < 3 || p % 2 == 0) bad("D0 needs odd p >= 3");
  const int b = (p - 1) / 2;
  std::vector<Arc> b_arcs;
  for (int u = 0; u < b; ++u) {
    for (int v = 0; v < b; ++v) {
      if (u != v) b_arcs.push_back({u, v});
    }
  }
  return gen_D0(p, b_arcs);
}

Digraph gen_Dpkk(int p, int k) {
  if (p < 3 || p > kMaxOrder) bad("Dpkk needs p in [3,64]");
  if (k < 1 || k > p - 2) bad("Dpkk needs k in [1, p-2]");
  std::vector<int> first;
  std::vector<int> second;
  for (int v = 0; v <= p - k - 1; ++v) first.push_back(v);
  for (int v = p - k - 1; v < p; ++v) second.push_back(v);
  std::vector<Arc> arcs;
  add_complete(arcs, first);
  add_complete(arcs, second);
  return Digraph::build(p, arcs);
}

Digraph gen_Dnq(int n, int q) {
  if (n < 3 || n > kMaxOrder) bad("Dnq needs n in [3,64]");
  if (q < 2 || q > n) bad("Dnq needs q in [2, n]");
  std::vector<Arc> arcs;
  for (int i = 0; i <= n - q; ++i) arcs.push_back({i, i + 1});
  arcs.push_back({0, n - 1});
  for (int i = n - q + 1; i <= n - 2; ++i) arcs.push_back({i + 1, i});
  return Digraph::build(n, arcs);
}

int hn_x(int /*n*/, int i) { return i; }
int hn_y(int n, int j) { return n - 4 + j; }

std::vector<HnClause> hn_clauses(int n) {
  if (n < 8 || n > kMaxOrder) bad("Hn needs n in [8,64]");
  const auto x = [n](int i) { return hn_x(n, i); };
  const auto y = [n](int j) { return hn_y(n, j); };
  std::vector<HnClause> clauses;

  HnClause c1{"y_i y_j, i != j", {}};
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i != j) c1.arcs.push_back({y(i), y(j)});
    }
  }
  clauses.push_back(std::move(c1));

  // x_{n-4} is the last x-vertex, so the chain stops at x_{n-5} x_{n-4}.
  HnClause c2{"x_i x_{i+1}, 0 <= i <= n-5", {}};
  for (int i = 0; i <= n - 5; ++i) c2.arcs.push_back({x(i), x(i + 1)});
  clauses.push_back(std::move(c2));

  HnClause c3{"y_i x_j, 1 <= i <= 3, 1 <= j <= n-6", {}};
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= n - 6; ++j) c3.arcs.push_back({y(i), x(j)});
  }
  clauses.push_back(std::move(c3));

  HnClause c4{"x_i x_j, 1 <= j < i <= n-4", {}};
  for (int i = 1; i <= n - 4; ++i) {
    for (int j = 1; j < i; ++j) c4.arcs.push_back({x(i), x(j)});
  }
  clauses.push_back(std::move(c4));

  HnClause c5{"x_{n-4} y_i, x_{n-6} y_i, 1 <= i <= 3", {}};
  for (int i = 1; i <= 3; ++i) {
    c5.arcs.push_back({x(n - 4), y(i)});
    c5.arcs.push_back({x(n - 6), y(i)});
  }
  clauses.push_back(std::move(c5));

  HnClause c6{"x_i x_{n-5}, 1 <= i <= n-7", {}};
  for (int i = 1; i <= n - 7; ++i) c6.arcs.push_back({x(i), x(n - 5)});
  clauses.push_back(std::move(c6));

  HnClause c7{"x_0 x_{n-5}, x_{n-5} x_0, x_{n-4} x_0, x_{n-6} x_{n-4}", {}};
  c7.arcs = {{x(0), x(n - 5)},
             {x(n - 5), x(0)},
             {x(n - 4), x(0)},
             {x(n - 6), x(n - 4)}};
  clauses.push_back(std::move(c7));
  return clauses;
}

Digraph gen_Hn(int n) {
  std::vector<Arc> arcs;
  for (const HnClause& c : hn_clauses(n)) {
    arcs.insert(arcs.end(), c.arcs.begin(), c.arcs.end());
  }
  std::vector<std::string> labels;
  for (int i = 0; i <= n - 4; ++i) labels.push_back("x" + std::to_string(i));
  for (int j = 1; j <= 3; ++j) labels.push_back("y" + std::to_string(j));
  return Digraph::build(n, arcs, std::move(labels));
}

Walk hn_witness_bypass(int n) {
  if (n < 8 || n > kMaxOrder) bad("Hn needs n in [8,64]");
  Walk w;
  w.kind = WalkKind::kBypass;
  for (int j = 1; j <= 3; ++j) w.vertices.push_back(hn_y(n, j));
  for (int i = 2; i <= n - 4; ++i) w.vertices.push_back(hn_x(n, i));
  w.vertices.push_back(hn_x(n, 0));
  w.vertices.push_back(hn_x(n, 1));
  return w;
}

Digraph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kD0: return gen_D0(spec.p, spec.b_arcs);
    case Family::kDpkk: return gen_Dpkk(spec.p, spec.k);
    case Family::kT5: return gen_T5();
    case Family::kHn: return gen_Hn(spec.n);
    case Family::kDnq: return gen_Dnq(spec.n, spec.q);
    case Family::kComplete: return gen_complete(spec.p);
    case Family::kCycle: return gen_cycle(spec.p);
    case Family::kB6: return b6_fixture().digraph();
    case Family::kB8: {
      const B8Search s = search_B8(FixedCycleSpace(4).size());
      if (!s.fixture) {
        throw Error(ErrorCode::kDerivationFailed, "no B8 witness found");
      }
      return s.fixture->digraph();
    }
  }
  bad("unknown family");
}

FixedCycleSpace::FixedCycleSpace(int a) : a_(a) {
  if (a < 2 || 2 * a * a - 2 * a > 62) {
    bad("fixed-cycle space needs a in [2,6]");
  }
  const int p = 2 * a;
  base_out_.assign(p, 0);
  for (int i = 0; i < a; ++i) {
    base_out_[i] |= bit(a + i);            // x_i -> y_i
    base_out_[a + i] |= bit((i + 1) % a);  // y_i -> x_{i+1}
  }
  for (int u = 0; u < p; ++u) {
    const bool ux = u < a;
    for (int v = 0; v < p; ++v) {
      if ((v < a) == ux) continue;
      if (base_out_[u] & bit(v)) continue;
      free_.push_back({u, v});
    }
  }
}

std::vector<int> FixedCycleSpace::cycle() const {
  std::vector<int> c;
  for (int i = 0; i < a_; ++i) {
    c.push_back(i);
    c.push_back(a_ + i);
  }
  return c;
}

Digraph FixedCycleSpace::digraph(std::uint64_t mask) const {
  std::vector<VertexMask> out = base_out_;
  while (mask != 0) {
    const int b = std::countr_zero(mask);
    mask &= mask - 1;
    out[free_[b].from] |= bit(free_[b].to);
  }
  return Digraph::from_out_masks(out);
}

BipartiteDigraph FixedCycleSpace::bipartite(std::uint64_t mask) const {
  return BipartiteDigraph::build(digraph(mask), full_mask(a_));
}

B6Derivation derive_B6() {
  constexpr int a = 3;
  std::vector<Arc> cross;
  for (int u = 0; u < 2 * a; ++u) {
    for (int v = 0; v < 2 * a; ++v) {
      if ((u < a) != (v < a)) cross.push_back({u, v});
    }
  }
  B6Derivation result;
  std::vector<std::uint64_t> survivors;
  const std::uint64_t total = std::uint64_t{1} << cross.size();
  std::vector<VertexMask> out(2 * a);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t b = 0; b < cross.size(); ++b) {
      if ((mask >> b) & 1U) out[cross[b].from] |= bit(cross[b].to);
    }
    const Digraph d = Digraph::from_out_masks(out);
    if (!is_strong(d)) continue;
    const BipartiteDigraph bd = BipartiteDigraph::build(d, full_mask(a));
    if (!bipartite_condition_A(bd, 1).holds) continue;
    if (hamiltonian_cycle(d).found()) continue;
    survivors.push_back(mask);
  }
  result.enumerated = total;
  result.survivors = survivors.size();

  std::vector<Digraph> representatives;
  std::vector<std::uint64_t> rep_masks;
  for (std::uint64_t mask : survivors) {
    std::vector<Arc> arcs;
    for (std::size_t b = 0; b < cross.size(); ++b) {
      if ((mask >> b) & 1U) arcs.push_back(cross[b]);
    }
    const Digraph d = Digraph::build(2 * a, arcs);
    bool seen = false;
    for (const Digraph& r : representatives) {
      if (isomorphic(d, r)) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      representatives.push_back(d);
      rep_masks.push_back(mask);
    }
  }
  result.classes = static_cast<int>(representatives.size());
  if (result.classes != 1) {
    throw Error(ErrorCode::kDerivationFailed,
                std::to_string(result.classes) +
                    " isomorphism classes of strong non-Hamiltonian A_1 "
                    "digraphs on 3+3 vertices, expected exactly one");
  }
  result.fixture = BipartiteDigraph::build(
      representatives.front().with_labels(
          {"x1", "x2", "x3", "y1", "y2", "y3"}),
      full_mask(a));
  const SolveResult bypass = hamiltonian_bypass(result.fixture.digraph());
  if (!bypass.found()) {
    throw Error(ErrorCode::kDerivationFailed,
                "derived B6 has no Hamiltonian bypass");
  }
  result.bypass = bypass.walk;
  return result;
}

const BipartiteDigraph& b6_fixture() {
  static const BipartiteDigraph fixture = derive_B6().fixture;
  return fixture;
}

B8Search search_B8(std::uint64_t candidate_budget) {
  const FixedCycleSpace space(4);
  B8Search result;
  const std::uint64_t limit = std::min(candidate_budget, space.size());
  constexpr std::uint64_t kChunk = 4096;
  std::uint64_t best = space.size();
  // Chunks are scanned in order; within a chunk the lowest hit wins, so the
  // result does not depend on the number of threads.
  for (std::uint64_t base = 0; base < limit && best == space.size();
       base += kChunk * 64) {
    const std::uint64_t end = std::min(limit, base + kChunk * 64);
    const auto chunks = static_cast<std::int64_t>((end - base + kChunk - 1) / kChunk);
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t lo = base + static_cast<std::uint64_t>(c) * kChunk;
      const std::uint64_t hi = std::min(end, lo + kChunk);
      for (std::uint64_t mask = lo; mask < hi; ++mask) {
        const BipartiteDigraph b = space.bipartite(mask);
        if (!bipartite_condition_A(b, 0).holds) continue;
        if (hamiltonian_bypass(b.digraph()).found()) continue;
        best = std::min(best, mask);
        break;
      }
    }
    result.examined = end;
  }
  if (best < space.size()) {
    result.outcome = Outcome::kFound;
    result.mask = best;
    result.examined = best + 1;
    result.fixture = BipartiteDigraph::build(
        space.digraph(best).with_labels(
            {"x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"}),
        full_mask(4));
  } else if (limit == space.size()) {
    result.outcome = Outcome::kNotFound;
  } else {
    result.outcome = Outcome::kExhausted;
  }
  return result;
}

std::string fixture_text(const BipartiteDigraph& b,
                         const std::vector<std::string>& provenance) {
  std::ostringstream os;
  write_arclist(os, b, provenance);
  return os.str();
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> certification(const BipartiteDigraph& b) {
  const Digraph& d = b.digraph();
  const auto level = max_condition_A_level(b);
  const SolveResult bypass = hamiltonian_bypass(d);
  std::vector<std::string> lines = {
      "strong: " + yes_no(is_strong(d)),
      "hamiltonian cycle: " + yes_no(hamiltonian_cycle(d).found()),
      "max condition A level: " +
          (level ? std::to_string(*level) : std::string("none")),
      "hamiltonian bypass: " + yes_no(bypass.found()),
  };
  if (bypass.found()) lines.push_back("bypass witness: " + to_string(bypass.walk));
  return lines;
}

}  // namespace

std::string regenerate_fixture(Family f) {
  std::vector<std::string> header;
  BipartiteDigraph b;
  if (f == Family::kB6) {
    const B6Derivation der = derive_B6();
    b = der.fixture;
    header = {"B6: derive_B6 over all 3+3 balanced bipartite digraphs",
              "enumerated " + std::to_string(der.enumerated) + ", survivors " +
                  std::to_string(der.survivors) + ", classes " +
                  std::to_string(der.classes)};
  } else if (f == Family::kB8) {
    const B8Search s = search_B8(FixedCycleSpace(4).size());
    if (!s.fixture) {
      throw Error(ErrorCode::kDerivationFailed, "no B8 witness found");
    }
    b = *s.fixture;
    header = {"B8: search_B8 over the fixed-cycle space of order 8",
              "first witness at mask " + std::to_string(s.mask)};
  } else {
    bad("fixtures exist only for B6 and B8");
  }
  for (std::string& line : certification(b)) header.push_back(std::move(line));
  return fixture_text(b, header);
}

}  // namespace hambypass
