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

#include <gtest/gtest.h>

#include <random>

#include "hambypass/conditions.h"
#include "hambypass/error.h"
#include "hambypass/families.h"
#include "hambypass/isomorphism.h"
#include "hambypass/solvers.h"
#include "oracles.h"

namespace hambypass {
namespace {

bool nonadjacent(const Digraph& d, int x, int y) {
  return x != y && !d.has_arc(x, y) && !d.has_arc(y, x);
}

int deg(const Digraph& d, int v) { return oracle::degree(d, v); }
int out_deg(const Digraph& d, int v) {
  int n = 0;
  for (int u = 0; u < d.order(); ++u) n += u != v && d.has_arc(v, u);
  return n;
}
int in_deg(const Digraph& d, int v) {
  int n = 0;
  for (int u = 0; u < d.order(); ++u) n += u != v && d.has_arc(u, v);
  return n;
}

bool naive_meyniel(const Digraph& d, int t) {
  for (int x = 0; x < d.order(); ++x) {
    for (int y = x + 1; y < d.order(); ++y) {
      if (nonadjacent(d, x, y) && deg(d, x) + deg(d, y) < t) return false;
    }
  }
  return true;
}

bool triple_violation(const Digraph& d, int x, int y, int z) {
  const int p = d.order();
  if (!nonadjacent(d, x, y) || z == x || z == y) return false;
  const int base = deg(d, x) + deg(d, y);
  if (!d.has_arc(x, z) && base + out_deg(d, x) + in_deg(d, z) < 3 * p - 2) {
    return true;
  }
  return !d.has_arc(z, x) && base + in_deg(d, x) + out_deg(d, z) < 3 * p - 2;
}

bool naive_triple(const Digraph& d) {
  const int p = d.order();
  for (int x = 0; x < p; ++x) {
    for (int y = 0; y < p; ++y) {
      for (int z = 0; z < p; ++z) {
        if (triple_violation(d, x, y, z)) return false;
      }
    }
  }
  return true;
}

bool naive_four(const Digraph& d, int t, bool disjoint) {
  const int p = d.order();
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < p; ++x) {
    for (int y = x + 1; y < p; ++y) {
      if (nonadjacent(d, x, y)) pairs.push_back({x, y});
    }
  }
  for (size_t i = 0; i < pairs.size(); ++i) {
    for (size_t j = i + 1; j < pairs.size(); ++j) {
      const auto [x, y] = pairs[i];
      const auto [w, z] = pairs[j];
      if (disjoint && (x == w || x == z || y == w || y == z)) continue;
      if (deg(d, x) + deg(d, y) + deg(d, w) + deg(d, z) < t) return false;
    }
  }
  return true;
}

bool naive_A(const BipartiteDigraph& b, int l) {
  const Digraph& d = b.digraph();
  const int a = b.half_order();
  for (int u = 0; u < d.order(); ++u) {
    for (int v = 0; v < d.order(); ++v) {
      if (b.in_x(u) == b.in_x(v) || d.has_arc(u, v)) continue;
      if (out_deg(d, u) + in_deg(d, v) < a + l) return false;
    }
  }
  return true;
}

bool naive_d0(const Digraph& d) {
  const int p = d.order();
  if (p < 3 || p % 2 == 0) return false;
  for (VertexMask f = 0; f <= full_mask(p); ++f) {
    if (popcount(f) != (p + 1) / 2) continue;
    bool ok = true;
    for (int u = 0; u < p && ok; ++u) {
      for (int v = 0; v < p && ok; ++v) {
        if (u == v) continue;
        const bool fu = (f >> u) & 1U;
        const bool fv = (f >> v) & 1U;
        if (fu && fv && d.has_arc(u, v)) ok = false;
        if (fu != fv && !d.has_arc(u, v)) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

// Some vertex c and a split of the rest into nonempty S, T with S + c and
// T + c complete and no arcs between S and T.
bool naive_dpkk(const Digraph& d) {
  const int p = d.order();
  for (int c = 0; c < p; ++c) {
    const VertexMask rest = full_mask(p) & ~bit(c);
    for (VertexMask s = rest; s != 0; s = (s - 1) & rest) {
      const VertexMask t = rest & ~s;
      if (t == 0) continue;
      bool ok = true;
      for (int u = 0; u < p && ok; ++u) {
        for (int v = 0; v < p && ok; ++v) {
          if (u == v) continue;
          const bool same = (u == c || v == c) ||
                            (((s >> u) & 1U) == ((s >> v) & 1U));
          if (same != d.has_arc(u, v)) ok = false;
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

TEST(MinDegreeTest, Examples) {
  EXPECT_TRUE(min_degree_condition(gen_complete(4), 4).holds);
  const ConditionReport h = min_degree_condition(gen_Hn(10), 10);
  EXPECT_FALSE(h.holds);
  EXPECT_EQ(h.witness, std::vector<int>{hn_x(10, 0)});
  EXPECT_EQ(h.params.at("d"), 4);
  EXPECT_TRUE(min_degree_condition(gen_cycle(3), 2).holds);
}

TEST(MeynielTest, Examples) {
  EXPECT_TRUE(meyniel_like(gen_T5(), 8).holds);
  EXPECT_TRUE(meyniel_like(gen_cycle(3), 4).holds);
  const ConditionReport c4 = meyniel_like(gen_cycle(4), 6);
  EXPECT_FALSE(c4.holds);
  EXPECT_EQ(c4.params.at("sum"), 4);
}

TEST(MeynielTest, RestrictionSet) {
  // 0 and 2 are nonadjacent in C_4; restricting to {0, 1} hides the pair.
  EXPECT_TRUE(meyniel_like(gen_cycle(4), 6, mask_of({0, 1})).holds);
  EXPECT_FALSE(meyniel_like(gen_cycle(4), 6, mask_of({0, 2})).holds);
}

TEST(TripleTest, Examples) {
  EXPECT_TRUE(manoussakis_triple(gen_T5()).holds);
  EXPECT_TRUE(manoussakis_triple(gen_complete(5)).holds);
  const Digraph path = Digraph::build(4, {{0, 1}, {1, 2}, {2, 3}});
  const ConditionReport r = manoussakis_triple(path);
  ASSERT_FALSE(r.holds);
  ASSERT_EQ(r.witness.size(), 3u);
  EXPECT_TRUE(triple_violation(path, r.witness[0], r.witness[1], r.witness[2]));
  EXPECT_THROW(manoussakis_triple(gen_cycle(3)), Error);
}

TEST(OneExceptionTest, Examples) {
  const ConditionReport h = one_exception_degree(gen_Hn(10));
  EXPECT_TRUE(h.holds);
  EXPECT_EQ(h.params.at("z"), hn_x(10, 0));
  EXPECT_EQ(h.params.at("d_z"), 4);
  const ConditionReport k = one_exception_degree(gen_complete(4));
  EXPECT_TRUE(k.holds);
  EXPECT_EQ(k.params.at("z"), 0);
  const ConditionReport c = one_exception_degree(gen_cycle(4));
  EXPECT_FALSE(c.holds);
  EXPECT_EQ(c.witness, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(exceptional_vertex_candidates(gen_Hn(10)), bit(hn_x(10, 0)));
  EXPECT_EQ(exceptional_vertex_candidates(gen_complete(4)), full_mask(4));
  EXPECT_EQ(exceptional_vertex_candidates(gen_cycle(4)), VertexMask{0});
}

TEST(ConditionATest, Examples) {
  std::vector<Arc> all;
  for (int x = 0; x < 3; ++x) {
    for (int y = 3; y < 6; ++y) {
      all.push_back({x, y});
      all.push_back({y, x});
    }
  }
  const BipartiteDigraph k33 = BipartiteDigraph::standard(3, all);
  for (int l = 0; l <= 3; ++l) EXPECT_TRUE(bipartite_condition_A(k33, l).holds);
  EXPECT_EQ(max_condition_A_level(k33), kUnboundedL);
  const BipartiteDigraph& b6 = b6_fixture();
  EXPECT_TRUE(bipartite_condition_A(b6, 1).holds);
  EXPECT_FALSE(bipartite_condition_A(b6, 2).holds);
  EXPECT_EQ(max_condition_A_level(b6), 1);
}

TEST(FourVertexTest, Examples) {
  EXPECT_TRUE(four_vertex_condition(gen_T5(), 100).holds);
  const Digraph one_pair = Digraph::build(
      4, {{0, 1}, {1, 0}, {0, 3}, {3, 0}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}});
  EXPECT_TRUE(four_vertex_condition(one_pair, 100).holds);
  EXPECT_TRUE(four_vertex_condition(one_pair, 100, true).holds);
  // Two disjoint nonadjacent pairs {0,1} and {2,3}.
  const Digraph two = Digraph::build(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  const ConditionReport r = four_vertex_condition(two, 13, true);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.params.at("sum"), 8);
}

TEST(FourVertexTest, OverlapSwitch) {
  // A path 0 -> 1 -> 2: pairs {0,2} only; a star gives overlapping pairs.
  const Digraph star = Digraph::build(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_TRUE(four_vertex_condition(star, 100, true).holds);
  const ConditionReport overlap = four_vertex_condition(star, 100);
  ASSERT_FALSE(overlap.holds);
  ASSERT_EQ(overlap.witness.size(), 4u);
}

TEST(ClassifyTest, Examples) {
  EXPECT_EQ(classify_exception(gen_T5()).cls, ExceptionClass::kT5);
  const ExceptionMatch m = classify_exception(gen_Dpkk(7, 3));
  EXPECT_EQ(m.cls, ExceptionClass::kDpkk);
  EXPECT_EQ(m.k, 3);
  EXPECT_EQ(classify_exception(gen_complete(4)).cls, ExceptionClass::kNone);
  EXPECT_EQ(classify_exception(gen_cycle(3)).cls, ExceptionClass::kC3);
  EXPECT_EQ(classify_exception(b6_fixture().digraph()).cls, ExceptionClass::kB6);
}

TEST(ClassifyTest, GeneratorRoundTrip) {
  for (int p = 4; p <= 9; ++p) {
    for (int k = 1; k <= p - 2; ++k) {
      const ExceptionMatch m = classify_exception(gen_Dpkk(p, k));
      EXPECT_EQ(m.cls, ExceptionClass::kDpkk) << p << "," << k;
      EXPECT_EQ(m.k, std::min(k, p - 1 - k));
    }
  }
  std::mt19937_64 rng(9);
  for (int p = 3; p <= 11; p += 2) {
    for (int trial = 0; trial < 5; ++trial) {
      const int b = (p - 1) / 2;
      std::vector<Arc> arcs;
      for (int u = 0; u < b; ++u) {
        for (int v = 0; v < b; ++v) {
          if (u != v && rng() % 2) arcs.push_back({u, v});
        }
      }
      const Digraph d = gen_D0(p, arcs);
      const auto f = d0_independent_set(d);
      ASSERT_TRUE(f.has_value()) << p;
      EXPECT_EQ(popcount(*f), (p + 1) / 2);
      const auto all = matching_exceptions(d);
      EXPECT_NE(std::find_if(all.begin(), all.end(),
                             [](const ExceptionMatch& e) {
                               return e.cls == ExceptionClass::kD0;
                             }),
                all.end());
    }
  }
}

// Exhaustive p <= 4 (and sampled p = 5..7) agreement with the naive loops.
void check_against_naive(const Digraph& d) {
  const int p = d.order();
  for (int t : {2 * p - 3, 2 * p - 2, 2 * p - 1}) {
    const ConditionReport r = meyniel_like(d, t);
    ASSERT_EQ(r.holds, naive_meyniel(d, t));
    if (!r.holds) {
      const int x = r.witness[0], y = r.witness[1];
      ASSERT_TRUE(nonadjacent(d, x, y));
      ASSERT_LT(deg(d, x) + deg(d, y), t);
    }
  }
  if (p >= 4) {
    const ConditionReport r = manoussakis_triple(d);
    ASSERT_EQ(r.holds, naive_triple(d));
    if (!r.holds) {
      ASSERT_TRUE(triple_violation(d, r.witness[0], r.witness[1], r.witness[2]));
    }
  }
  for (bool disjoint : {false, true}) {
    for (int t : {4 * p - 4, 4 * p - 3}) {
      const ConditionReport r = four_vertex_condition(d, t, disjoint);
      ASSERT_EQ(r.holds, naive_four(d, t, disjoint));
      if (!r.holds) {
        const auto& w = r.witness;
        ASSERT_TRUE(nonadjacent(d, w[0], w[1]));
        ASSERT_TRUE(nonadjacent(d, w[2], w[3]));
        ASSERT_LT(deg(d, w[0]) + deg(d, w[1]) + deg(d, w[2]) + deg(d, w[3]), t);
      }
    }
  }
  int low = 0;
  for (int v = 0; v < p; ++v) low += deg(d, v) < p;
  ASSERT_EQ(one_exception_degree(d).holds, low <= 1);
  int min_deg = 1 << 20;
  for (int v = 0; v < p; ++v) min_deg = std::min(min_deg, deg(d, v));
  ASSERT_EQ(min_degree_condition(d, p).holds, min_deg >= p);
  ASSERT_EQ(d0_independent_set(d).has_value(), naive_d0(d));
  ASSERT_EQ(dpkk_parameter(d).has_value(), naive_dpkk(d));
}

TEST(ConditionOracleTest, ExhaustiveUpToFour) {
  for (int p = 2; p <= 4; ++p) {
    const AdjacencyCode codes = AdjacencyCode{1} << (p * (p - 1));
    for (AdjacencyCode c = 0; c < codes; ++c) {
      SCOPED_TRACE(c);
      check_against_naive(from_adjacency_code(p, c));
    }
  }
}

TEST(ConditionOracleTest, SampledLargerOrders) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 600; ++trial) {
    const int p = 5 + static_cast<int>(rng() % 3);
    const double q = 0.3 + 0.1 * static_cast<double>(rng() % 6);
    check_against_naive(oracle::random_digraph(p, q, rng));
  }
}

TEST(ConditionOracleTest, ConditionAMatchesNaive) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int a = 2 + static_cast<int>(rng() % 3);
    std::vector<Arc> arcs;
    for (int x = 0; x < a; ++x) {
      for (int y = a; y < 2 * a; ++y) {
        if (rng() % 3) arcs.push_back({x, y});
        if (rng() % 3) arcs.push_back({y, x});
      }
    }
    const BipartiteDigraph b = BipartiteDigraph::standard(a, arcs);
    std::optional<int> best;
    for (int l = 0; l <= 2 * a; ++l) {
      const bool naive = naive_A(b, l);
      ASSERT_EQ(bipartite_condition_A(b, l).holds, naive);
      if (naive) best = l;
    }
    const auto level = max_condition_A_level(b);
    if (level == kUnboundedL) {
      EXPECT_EQ(best, 2 * a);
    } else {
      EXPECT_EQ(level, best);
    }
  }
}

TEST(ConditionPropertyTest, VacuousAndMonotone) {
  std::mt19937_64 rng(12);
  for (int p = 4; p <= 8; ++p) {
    // Random tournament.
    std::vector<Arc> arcs;
    for (int u = 0; u < p; ++u) {
      for (int v = u + 1; v < p; ++v) {
        arcs.push_back(rng() % 2 ? Arc{u, v} : Arc{v, u});
      }
    }
    const Digraph t = Digraph::build(p, arcs);
    for (const Digraph& d : {t, gen_complete(p)}) {
      EXPECT_TRUE(meyniel_like(d, 1000).holds);
      EXPECT_TRUE(manoussakis_triple(d).holds);
      EXPECT_TRUE(four_vertex_condition(d, 1000).holds);
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph d = oracle::random_digraph(6, 0.5, rng);
    for (int t = 1; t < 30; ++t) {
      if (meyniel_like(d, t).holds) {
        EXPECT_TRUE(meyniel_like(d, t - 1).holds);
      }
      if (four_vertex_condition(d, t).holds) {
        EXPECT_TRUE(four_vertex_condition(d, t - 1).holds);
      }
      if (min_degree_condition(d, t).holds) {
        EXPECT_TRUE(min_degree_condition(d, t - 1).holds);
      }
    }
  }
}

TEST(ConditionReportTest, JsonLine) {
  const std::string line = to_json_line(meyniel_like(gen_cycle(4), 6));
  EXPECT_NE(line.find("\"holds\":false"), std::string::npos);
  EXPECT_EQ(line.find('\n'), std::string::npos);
}

}  // namespace
}  // namespace hambypass
