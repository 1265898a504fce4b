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

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <unistd.h>

#include "hambypass/error.h"
#include "hambypass/families.h"
#include "hambypass/harness.h"
#include "hambypass/io.h"
#include "hambypass/isomorphism.h"
#include "hambypass/scan.h"
#include "oracles.h"

namespace hambypass {
namespace {

TEST(SpaceTest, SizesAndLimits) {
  EXPECT_EQ(SearchSpace::exhaustive(4).size(), 4096u);
  EXPECT_EQ(SearchSpace::exhaustive_bipartite(2).size(), 256u);
  EXPECT_EQ(SearchSpace::fixed_cycle(3).size(), std::uint64_t{1} << 12);
  EXPECT_EQ(SearchSpace::random(7, 0.5, 123, 1).size(), 123u);
  EXPECT_THROW(SearchSpace::exhaustive(6).size(), Error);
  EXPECT_THROW(SearchSpace::exhaustive_bipartite(4).size(), Error);
  EXPECT_THROW(SearchSpace::fixed_cycle(5).size(), Error);
  EXPECT_THROW(SearchSpace::random(7, 1.5, 10, 1).size(), Error);
  EXPECT_THROW(SearchSpace::random(7, 0.0, 10, 1).size(), Error);
}

TEST(SpaceTest, ItemsAreDeterministic) {
  const SearchSpace s = SearchSpace::random(8, 0.5, 100, 77);
  for (std::uint64_t i = 0; i < 100; ++i) {
    EXPECT_EQ(space_item(s, i).digraph, space_item(s, i).digraph);
  }
  EXPECT_NE(derive_seed(77, 0), derive_seed(77, 1));
  EXPECT_NE(derive_seed(77, 0), derive_seed(78, 0));
  EXPECT_EQ(space_item(SearchSpace::exhaustive(4), 1234).digraph,
            from_adjacency_code(4, 1234));
  const SpaceItem b = space_item(SearchSpace::random_bipartite(3, 0.5, 10, 2), 3);
  ASSERT_TRUE(b.x_side.has_value());
  for (const Arc& a : b.digraph.arcs()) {
    EXPECT_NE((*b.x_side >> a.from) & 1U, (*b.x_side >> a.to) & 1U);
  }
}

TEST(SpaceTest, SampledArcDensity) {
  const SearchSpace s = SearchSpace::random(9, 0.3, 2000, 5);
  std::uint64_t arcs = 0;
  for (std::uint64_t i = 0; i < s.count; ++i) arcs += space_item(s, i).digraph.arc_count();
  const double density = static_cast<double>(arcs) / (2000.0 * 72);
  EXPECT_NEAR(density, 0.3, 0.01);

  const SearchSpace low = SearchSpace::random_low_vertex(9, 0.7, 0.1, 2000, 5);
  std::uint64_t at_zero = 0;
  for (std::uint64_t i = 0; i < low.count; ++i) {
    at_zero += space_item(low, i).digraph.total_degree(0);
  }
  EXPECT_NEAR(static_cast<double>(at_zero) / (2000.0 * 16), 0.1, 0.01);
}

// The exhaustive p = 4 scan of T1.2 against permutation enumeration, digraph
// by digraph.
TEST(ScanTest, MinDegreeOrderFourMatchesPermutationOracle) {
  const TheoremEntry& entry = find_entry("T1.2");
  const SearchRecord r = exhaustive_scan(entry, SearchSpace::exhaustive(4));
  std::uint64_t hypothesis = 0;
  for (AdjacencyCode c = 0; c < 4096; ++c) {
    const Digraph d = space_item(SearchSpace::exhaustive(4), c).digraph;
    int min_deg = 100;
    for (int v = 0; v < 4; ++v) min_deg = std::min(min_deg, oracle::degree(d, v));
    const bool hyp = min_deg >= 4;
    hypothesis += hyp;
    const TheoremVerdict v = evaluate(entry, d);
    ASSERT_EQ(v.hypothesis, hyp) << c;
    if (hyp) {
      ASSERT_TRUE(oracle::has_bypass(d)) << c;
      ASSERT_EQ(v.status, VerdictStatus::kHolds) << c;
    }
  }
  EXPECT_EQ(r.enumerated, 4096u);
  EXPECT_EQ(r.hypothesis, hypothesis);
  EXPECT_EQ(r.holds, hypothesis);
  EXPECT_EQ(r.counterexample_count, 0u);
  EXPECT_TRUE(r.reconciled());
  EXPECT_EQ(r.status, ScanStatus::kComplete);
}

TEST(ScanTest, ParallelMatchesSerialAndRepeats) {
  const std::vector<std::pair<std::string, SearchSpace>> cases = {
      {"T1.3", SearchSpace::exhaustive(4)},
      {"C2", SearchSpace::exhaustive(4)},
      {"T1.5", SearchSpace::random(7, 0.6, 3000, 9)},
      {"L4.1", SearchSpace::random_low_vertex(7, 0.7, 0.2, 3000, 9)},
      {"T1.6", SearchSpace::random_bipartite(3, 0.6, 3000, 9)},
      {"P1", SearchSpace::random_fixed_cycle(3, 0.3, 3000, 9)},
  };
  for (const auto& [id, space] : cases) {
    const TheoremEntry& entry = find_entry(id);
    ScanOptions small_keep;
    small_keep.keep = 3;
    const std::string serial = to_json_line(run_scan_serial(entry, space, small_keep));
    for (int workers : {1, 2, 4}) {
      ScanOptions o = small_keep;
      o.workers = workers;
      EXPECT_EQ(to_json_line(run_scan(entry, space, o)), serial)
          << id << " workers=" << workers;
    }
    EXPECT_EQ(to_json_line(run_scan(entry, space, small_keep)),
              to_json_line(run_scan(entry, space, small_keep)));
    EXPECT_EQ(serial.find("seconds"), std::string::npos);
    EXPECT_NE(to_json_line(run_scan(entry, space), true).find("\"seconds\""),
              std::string::npos);
  }
}

TEST(ScanTest, CanonicalFilterSkipsRelabelings) {
  const TheoremEntry& entry = find_entry("T1.3");
  const SearchRecord full = run_scan(entry, SearchSpace::exhaustive(4));
  const SearchRecord canon = run_scan(entry, SearchSpace::exhaustive(4, true));
  EXPECT_EQ(canon.enumerated, 218u);
  EXPECT_EQ(canon.enumerated + canon.skipped, 4096u);
  EXPECT_TRUE(canon.reconciled());
  EXPECT_EQ(full.counterexample_count, 0u);
  EXPECT_EQ(canon.counterexample_count, 0u);
  EXPECT_LE(canon.exceptions, full.exceptions);
  EXPECT_GT(canon.exceptions, 0u);
}

TEST(ScanTest, CandidateLimitAndBudgetReportExhausted) {
  ScanOptions limit;
  limit.candidate_limit = 100;
  const SearchRecord cut = run_scan(find_entry("T1.2"), SearchSpace::exhaustive(4), limit);
  EXPECT_EQ(cut.status, ScanStatus::kExhausted);
  EXPECT_EQ(cut.enumerated, 100u);
  EXPECT_TRUE(cut.reconciled());

  ScanOptions budget;
  budget.budget = SolveBudget{1};
  const SearchRecord tiny =
      run_scan(find_entry("T1.2"), SearchSpace::random(8, 0.9, 200, 1), budget);
  EXPECT_EQ(tiny.status, ScanStatus::kExhausted);
  EXPECT_GT(tiny.undecided(), 0u);
  EXPECT_TRUE(tiny.reconciled());
  EXPECT_EQ(tiny.counterexample_count, 0u);
}

TEST(ScanTest, ScopeAndEntryChecks) {
  EXPECT_THROW(run_scan(find_entry("T1.6"), SearchSpace::exhaustive(4)), Error);
  EXPECT_THROW(run_scan(find_entry("T1.4"), SearchSpace::exhaustive(3)), Error);
  EXPECT_THROW(conjecture_search(find_entry("T1.2"), SearchSpace::exhaustive(3)),
               Error);
  EXPECT_THROW(exhaustive_scan(find_entry("T1.2"), SearchSpace::random(5, 0.5, 10, 1)),
               Error);
  EXPECT_THROW(random_scan(find_entry("T1.2"), SearchSpace::exhaustive(4)), Error);
}

// The entries below have hypotheses closed under reversing every arc, so a
// sample and its converses produce the same verdict statuses.
TEST(ScanTest, DualitySpotCheck) {
  const SearchSpace space = SearchSpace::random(6, 0.6, 1500, 17);
  for (const char* id : {"T1.2", "T1.3", "GH", "C1", "T5.1", "C2"}) {
    const TheoremEntry& entry = find_entry(id);
    for (std::uint64_t i = 0; i < space.count; ++i) {
      const Digraph d = space_item(space, i).digraph;
      const TheoremVerdict a = evaluate(entry, d);
      const TheoremVerdict b = evaluate(entry, converse(d));
      ASSERT_EQ(a.status, b.status) << id << " sample " << i;
    }
  }
}

TEST(ScanTest, ProvedEntriesHaveNoCounterexamples) {
  for (const TheoremEntry& e : registry()) {
    if (!e.proved) continue;
    std::vector<SearchSpace> spaces;
    if (e.bipartite) {
      spaces = {SearchSpace::exhaustive_bipartite(2),
                SearchSpace::random_bipartite(3, 0.6, 2000, 3),
                SearchSpace::random_fixed_cycle(4, 0.3, 2000, 3)};
    } else {
      spaces = {SearchSpace::exhaustive(4),
                SearchSpace::random(6, 0.7, 2000, 3),
                SearchSpace::random_low_vertex(7, 0.7, 0.2, 2000, 3)};
    }
    for (const SearchSpace& s : spaces) {
      if (s.order() < e.min_order) continue;
      const SearchRecord r = run_scan(e, s);
      EXPECT_EQ(r.counterexample_count, 0u) << e.id << " " << to_json_line(r);
      EXPECT_TRUE(r.counterexamples.empty());
      EXPECT_TRUE(r.reconciled());
    }
  }
}

TEST(ScanTest, OpenStatementFindingsAreKept) {
  ScanOptions o;
  o.keep = 5;
  const SearchRecord r =
      conjecture_search(find_entry("C2"), SearchSpace::exhaustive(4), o);
  EXPECT_GT(r.counterexample_count, 0u);
  EXPECT_EQ(r.counterexamples.size(), 5u);
  for (std::size_t i = 1; i < r.counterexamples.size(); ++i) {
    EXPECT_LT(r.counterexamples[i - 1].index, r.counterexamples[i].index);
  }
  for (const Finding& f : r.counterexamples) {
    EXPECT_EQ(f.digraph, space_item(SearchSpace::exhaustive(4), f.index).digraph);
    EXPECT_FALSE(oracle::has_bypass(f.digraph));
    EXPECT_EQ(f.verdict.status, VerdictStatus::kCounterexample);
  }
}

TEST(ResultsSinkTest, WritesArcListsAndIndex) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("hambypass_sink_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  ScanOptions o;
  o.keep = 2;
  const SearchRecord r =
      conjecture_search(find_entry("C2"), SearchSpace::exhaustive(4), o);
  ResultsSink sink(dir);
  const auto files = sink.write(r);
  ASSERT_EQ(files.size(), r.counterexamples.size() + r.exception_samples.size());
  for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
    const ArcListFile f = read_arclist_file(files[i].string());
    EXPECT_EQ(f.digraph, r.counterexamples[i].digraph);
  }
  std::ifstream index(dir / "index.jsonl");
  std::string line;
  std::size_t lines = 0;
  while (std::getline(index, line)) {
    ++lines;
    EXPECT_EQ(line.front(), '{');
  }
  EXPECT_EQ(lines, files.size());
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace hambypass
