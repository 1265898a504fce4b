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

#include "hambypass/error.h"
#include "hambypass/families.h"
#include "hambypass/isomorphism.h"
#include "hambypass/solvers.h"
#include "oracles.h"

namespace hambypass {
namespace {

Digraph triangle() { return gen_cycle(3); }

void expect_valid(const Digraph& d, const SolveResult& r, WalkKind kind) {
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.walk.kind, kind);
  EXPECT_TRUE(is_valid(d, r.walk)) << to_string(r.walk);
}

TEST(HamiltonianCycleTest, Examples) {
  expect_valid(gen_complete(4), hamiltonian_cycle(gen_complete(4)), WalkKind::kCycle);
  EXPECT_EQ(hamiltonian_cycle(gen_Hn(10)).outcome, Outcome::kNotFound);
  EXPECT_EQ(hamiltonian_cycle(b6_fixture().digraph()).outcome, Outcome::kNotFound);
}

TEST(HamiltonianPathTest, Examples) {
  const SolveResult r = hamiltonian_path(triangle(), 0, std::nullopt);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.walk.vertices, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(hamiltonian_path(triangle(), 0, 1).outcome, Outcome::kNotFound);
  const Digraph d0 = gen_D0_complete_b(5);
  expect_valid(d0, hamiltonian_path(d0, std::nullopt, std::nullopt), WalkKind::kPath);
  EXPECT_THROW(hamiltonian_path(triangle(), 3, std::nullopt), Error);
}

TEST(HamiltonianBypassTest, Examples) {
  EXPECT_EQ(hamiltonian_bypass(triangle()).outcome, Outcome::kNotFound);
  EXPECT_EQ(hamiltonian_bypass(gen_T5()).outcome, Outcome::kNotFound);
  const Digraph h = gen_Hn(10);
  expect_valid(h, hamiltonian_bypass(h), WalkKind::kBypass);
  const Walk quoted = hn_witness_bypass(10);
  EXPECT_TRUE(is_valid(h, quoted));
  EXPECT_EQ(hamiltonian_bypass(gen_complete(2)).outcome, Outcome::kNotFound);
}

// Every digraph on at most 4 vertices against permutation enumeration.
TEST(SolverOracleTest, ExhaustiveSmallOrders) {
  for (int p = 2; p <= 4; ++p) {
    const AdjacencyCode codes = AdjacencyCode{1} << (p * (p - 1));
    for (AdjacencyCode code = 0; code < codes; ++code) {
      const Digraph d = from_adjacency_code(p, code);
      const SolveResult cycle = hamiltonian_cycle(d);
      ASSERT_EQ(cycle.found(), oracle::has_hamiltonian_cycle(d)) << code;
      if (cycle.found()) {
        ASSERT_TRUE(is_valid(d, cycle.walk));
      }
      const SolveResult path = hamiltonian_path(d, std::nullopt, std::nullopt);
      ASSERT_EQ(path.found(), oracle::has_hamiltonian_path(d)) << code;
      const SolveResult ends = hamiltonian_path(d, 0, p - 1);
      ASSERT_EQ(ends.found(), oracle::has_hamiltonian_path(d, 0, p - 1)) << code;
      if (p >= 3) {
        const SolveResult bypass = hamiltonian_bypass(d);
        ASSERT_EQ(bypass.found(), oracle::has_bypass(d)) << code;
        if (bypass.found()) {
          ASSERT_TRUE(is_valid(d, bypass.walk));
        }
      }
    }
  }
}

TEST(SolverOracleTest, SpanningDnqTwoMatchesBypassUpToOrderFive) {
  for (int p = 3; p <= 5; ++p) {
    const AdjacencyCode codes = AdjacencyCode{1} << (p * (p - 1));
    for (AdjacencyCode code = 0; code < codes; ++code) {
      const Digraph d = from_adjacency_code(p, code);
      ASSERT_EQ(find_spanning_dnq(d, 2).found(), hamiltonian_bypass(d).found())
          << "p=" << p << " code=" << code;
    }
  }
}

TEST(LongestCycleThroughTest, Examples) {
  const SolveResult k5 = longest_cycle_through(gen_complete(5), 2);
  ASSERT_TRUE(k5.found());
  EXPECT_EQ(k5.walk.size(), 5);
  const Digraph d32 = gen_Dpkk(5, 2);
  const SolveResult cut = longest_cycle_through(d32, 2);
  ASSERT_TRUE(cut.found());
  EXPECT_EQ(cut.walk.size(), 3);
  const Digraph pendant = Digraph::build(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  EXPECT_EQ(longest_cycle_through(pendant, 3).outcome, Outcome::kNotFound);
  EXPECT_THROW(longest_cycle_through(pendant, 4), Error);
}

TEST(CycleThroughSetTest, Examples) {
  const SolveResult one = cycle_through_set(triangle(), mask_of({1}));
  expect_valid(triangle(), one, WalkKind::kCycle);
  const Digraph d32 = gen_Dpkk(5, 2);
  EXPECT_EQ(cycle_through_set(d32, mask_of({0, 4})).outcome, Outcome::kNotFound);
  const SolveResult all = cycle_through_set(gen_complete(4), full_mask(4));
  ASSERT_TRUE(all.found());
  EXPECT_EQ(all.walk.size(), 4);
}

TEST(DnqTest, GeneratorPatternIsFound) {
  for (int n = 3; n <= 7; ++n) {
    for (int q = 2; q <= n; ++q) {
      const Digraph d = gen_Dnq(n, q);
      std::vector<int> seq(n);
      std::iota(seq.begin(), seq.end(), 0);
      EXPECT_TRUE(is_dnq(d, seq, q)) << n << "," << q;
      const SolveResult r = find_spanning_dnq(d, q);
      ASSERT_TRUE(r.found()) << n << "," << q;
      EXPECT_TRUE(is_dnq(d, r.walk.vertices, q));
    }
  }
  EXPECT_EQ(find_spanning_dnq(triangle(), 2).outcome, Outcome::kNotFound);
  EXPECT_THROW(find_dnq(triangle(), 2, 2), Error);
  EXPECT_THROW(find_dnq(triangle(), 3, 4), Error);
  EXPECT_EQ(find_dnq(triangle(), 4, 2).outcome, Outcome::kNotFound);
}

bool brute_dnq(const Digraph& d, int n, int q) {
  const int p = d.order();
  std::vector<int> seq;
  std::vector<bool> used(p, false);
  auto rec = [&](auto&& self) -> bool {
    if (static_cast<int>(seq.size()) == n) return is_dnq(d, seq, q);
    for (int v = 0; v < p; ++v) {
      if (used[v]) continue;
      used[v] = true;
      seq.push_back(v);
      if (self(self)) return true;
      seq.pop_back();
      used[v] = false;
    }
    return false;
  };
  return rec(rec);
}

TEST(BudgetTest, TinyBudgetIsExhausted) {
  const Digraph h = gen_Hn(12);
  EXPECT_EQ(hamiltonian_cycle(h, SolveBudget{1}).outcome, Outcome::kExhausted);
  EXPECT_EQ(hamiltonian_bypass(h, SolveBudget{1}).outcome, Outcome::kExhausted);
  EXPECT_EQ(longest_cycle_through(h, 0, SolveBudget{1}).outcome,
            Outcome::kExhausted);
  EXPECT_EQ(hamiltonian_cycle(h, SolveBudget{0}).outcome, Outcome::kNotFound);
}

class SolverPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(SolverPropertyTest, RandomDigraphs) {
  std::mt19937_64 rng(GetParam());
  for (int trial = 0; trial < 150; ++trial) {
    const int p = 3 + static_cast<int>(rng() % 5);
    const double q = 0.2 + 0.1 * static_cast<double>(rng() % 6);
    const Digraph d = oracle::random_digraph(p, q, rng);
    const auto cycles = oracle::all_cycles(d);

    // Duality.
    EXPECT_EQ(hamiltonian_bypass(d).found(), hamiltonian_bypass(converse(d)).found());
    EXPECT_EQ(hamiltonian_bypass(d).found(), oracle::has_bypass(d));

    // Longest cycle through each vertex against enumeration.
    for (int z = 0; z < p; ++z) {
      int best = 0;
      for (const auto& c : cycles) {
        if (std::find(c.begin(), c.end(), z) != c.end()) {
          best = std::max(best, static_cast<int>(c.size()));
        }
      }
      const SolveResult r = longest_cycle_through(d, z);
      if (best == 0) {
        EXPECT_EQ(r.outcome, Outcome::kNotFound);
      } else {
        ASSERT_TRUE(r.found());
        EXPECT_EQ(r.walk.size(), best);
        EXPECT_TRUE(is_valid(d, r.walk));
        EXPECT_NE(std::find(r.walk.vertices.begin(), r.walk.vertices.end(), z),
                  r.walk.vertices.end());
      }
      for (int len = 2; len <= p; ++len) {
        EXPECT_EQ(cycle_through_at_least(d, z, len).found(), best >= len);
      }
    }

    // Cycle through a random vertex set.
    const VertexMask m = (rng() & full_mask(p)) | 1;
    bool covered = false;
    for (const auto& c : cycles) covered = covered || (mask_of(c) & m) == m;
    const SolveResult set = cycle_through_set(d, m);
    EXPECT_EQ(set.found(), covered);
    if (set.found()) {
      EXPECT_TRUE(is_valid(d, set.walk));
      EXPECT_EQ(mask_of(set.walk.vertices) & m, m);
    }

    // D(n, q) against brute force on small orders.
    if (p <= 5) {
      for (int n = 3; n <= p; ++n) {
        for (int qq = 2; qq <= n; ++qq) {
          EXPECT_EQ(find_dnq(d, n, qq).found(), brute_dnq(d, n, qq))
              << "n=" << n << " q=" << qq;
        }
      }
    }

    // Monotonicity under arc addition.
    const int u = static_cast<int>(rng() % p);
    const int v = (u + 1 + static_cast<int>(rng() % (p - 1))) % p;
    std::vector<Arc> arcs = d.arcs();
    arcs.push_back({u, v});
    const Digraph more = Digraph::build(p, arcs);
    if (hamiltonian_cycle(d).found()) {
      EXPECT_TRUE(hamiltonian_cycle(more).found());
    }
    if (hamiltonian_bypass(d).found()) {
      EXPECT_TRUE(hamiltonian_bypass(more).found());
    }
    if (find_spanning_dnq(d, 3).found()) {
      EXPECT_TRUE(find_spanning_dnq(more, 3).found());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SolverPropertyTest, ::testing::Values(11, 12, 13, 14));

}  // namespace
}  // namespace hambypass
