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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hambypass/error.h"
#include "hambypass/families.h"
#include "hambypass/isomorphism.h"
#include "oracles.h"

namespace hambypass {
namespace {

// Number of unlabelled digraphs on p vertices (OEIS A000273).
TEST(CanonicalFilterTest, ClassCountsMatchKnownSequence) {
  const std::vector<std::uint64_t> expected = {0, 0, 3, 16, 218, 9608};
  for (int p = 2; p <= 5; ++p) {
    const CanonicalFilter filter(p);
    const AdjacencyCode codes = AdjacencyCode{1} << (p * (p - 1));
    std::uint64_t canonical = 0;
    for (AdjacencyCode c = 0; c < codes; ++c) canonical += filter.is_canonical(c);
    EXPECT_EQ(canonical, expected[p]) << "p=" << p;
  }
}

TEST(CanonicalFilterTest, AgreesWithCanonicalCode) {
  std::mt19937_64 rng(3);
  const CanonicalFilter filter(5);
  for (int trial = 0; trial < 300; ++trial) {
    const AdjacencyCode c = rng() & ((AdjacencyCode{1} << 20) - 1);
    const AdjacencyCode canon = filter.canonical(c);
    EXPECT_EQ(canon, canonical_code(from_adjacency_code(5, c)));
    EXPECT_TRUE(filter.is_canonical(canon));
    EXPECT_LE(canon, c);
  }
}

TEST(AdjacencyCodeTest, RoundTrip) {
  std::mt19937_64 rng(4);
  for (int p = 1; p <= kMaxCodeOrder; ++p) {
    for (int trial = 0; trial < 50; ++trial) {
      const Digraph d = oracle::random_digraph(p, 0.4, rng);
      EXPECT_EQ(from_adjacency_code(p, adjacency_code(d)), d);
    }
  }
}

TEST(IsomorphismTest, RelabelingsAreRecovered) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int p = 2 + static_cast<int>(rng() % 7);
    const Digraph d = oracle::random_digraph(p, 0.35, rng);
    std::vector<int> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Digraph e = permute(d, perm);
    const auto found = isomorphic(d, e);
    ASSERT_TRUE(found.has_value());
    for (int u = 0; u < p; ++u) {
      for (int v = 0; v < p; ++v) {
        if (u == v) continue;
        EXPECT_EQ(d.has_arc(u, v), e.has_arc((*found)[u], (*found)[v]));
      }
    }
    if (p <= 7) {
      EXPECT_EQ(canonical_code(d), canonical_code(e));
    }
  }
}

TEST(IsomorphismTest, NonIsomorphicPairs) {
  EXPECT_FALSE(isomorphic(gen_cycle(4), gen_Dnq(4, 2)).has_value());
  EXPECT_FALSE(isomorphic(gen_cycle(3), gen_cycle(4)).has_value());
  EXPECT_THROW(isomorphic(gen_complete(11), gen_complete(11)), Error);
  EXPECT_THROW(canonical_code(gen_complete(8)), Error);
}

TEST(IsomorphismTest, AgreesWithCanonicalCodesExhaustivelyAtOrderFour) {
  const CanonicalFilter filter(4);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 2000; ++trial) {
    const AdjacencyCode a = rng() & 4095;
    const AdjacencyCode b = rng() & 4095;
    const bool same = filter.canonical(a) == filter.canonical(b);
    EXPECT_EQ(isomorphic(from_adjacency_code(4, a), from_adjacency_code(4, b))
                  .has_value(),
              same);
  }
}

}  // namespace
}  // namespace hambypass
