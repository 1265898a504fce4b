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

#ifndef HAMBYPASS_SCAN_H_
#define HAMBYPASS_SCAN_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hambypass/digraph.h"
#include "hambypass/harness.h"
#include "hambypass/solvers.h"

namespace hambypass {

enum class SpaceKind {
  kExhaustive,           // every arc set on p labelled vertices (p <= 5)
  kExhaustiveBipartite,  // every cross-arc set on a + a vertices (a <= 3)
  kFixedCycle,           // FixedCycleSpace(a), every mask (a <= 4)
  kRandom,               // independent arcs on p vertices
  kRandomBipartite,      // independent cross arcs on a + a vertices
  kRandomFixedCycle,     // independent free arcs of FixedCycleSpace(a)
  kRandomLowVertex,      // as kRandom, but arcs at vertex 0 use low_probability
};

std::string_view space_kind_name(SpaceKind k);

struct SearchSpace {
  SpaceKind kind = SpaceKind::kExhaustive;
  int p = 0;  // general spaces
  int a = 0;  // bipartite spaces
  double probability = 0.5;
  double low_probability = 0.2;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  // Exhaustive general spaces only: skip non-minimal adjacency codes.
  bool canonical = false;

  static SearchSpace exhaustive(int p, bool canonical = false);
  static SearchSpace exhaustive_bipartite(int a);
  static SearchSpace fixed_cycle(int a);
  static SearchSpace random(int p, double probability, std::uint64_t count,
                            std::uint64_t seed);
  static SearchSpace random_low_vertex(int p, double probability,
                                       double low_probability,
                                       std::uint64_t count,
                                       std::uint64_t seed);
  static SearchSpace random_bipartite(int a, double probability,
                                      std::uint64_t count, std::uint64_t seed);
  static SearchSpace random_fixed_cycle(int a, double probability,
                                        std::uint64_t count,
                                        std::uint64_t seed);

  bool bipartite() const;
  bool sampled() const;
  int order() const { return bipartite() ? 2 * a : p; }
  // Number of items; throws Error(kSizeLimit) outside the supported range
  // and Error(kBadParameters) for an invalid probability.
  std::uint64_t size() const;
};

// The digraph behind item `index` of a space. The same index always yields
// the same digraph; sampled items use a seed derived from (seed, index).
struct SpaceItem {
  Digraph digraph;
  std::optional<VertexMask> x_side;
};
SpaceItem space_item(const SearchSpace& space, std::uint64_t index);

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// A digraph kept by a scan, with its full verdict for certification.
struct Finding {
  std::uint64_t index = 0;
  Digraph digraph;
  std::optional<VertexMask> x_side;
  TheoremVerdict verdict;
};

enum class ScanStatus { kComplete, kExhausted };
std::string_view scan_status_name(ScanStatus s);

struct SearchRecord {
  std::string entry;
  SearchSpace space;
  ScanStatus status = ScanStatus::kComplete;
  std::uint64_t enumerated = 0;
  std::uint64_t skipped = 0;  // non-canonical codes
  std::uint64_t vacuous = 0;
  std::uint64_t hypothesis = 0;
  std::uint64_t holds = 0;
  std::uint64_t exceptions = 0;
  std::uint64_t counterexample_count = 0;
  std::uint64_t undecided_hypothesis = 0;
  std::uint64_t undecided_conclusion = 0;
  std::map<std::string, std::uint64_t> exception_classes;
  // Lowest-index findings, at most ScanOptions::keep of each.
  std::vector<Finding> counterexamples;
  std::vector<Finding> exception_samples;
  double seconds = 0;

  // hypothesis == holds + exceptions + counterexamples + undecided
  // conclusions, and every enumerated item is accounted for once.
  bool reconciled() const;
  std::uint64_t undecided() const {
    return undecided_hypothesis + undecided_conclusion;
  }
};

struct ScanOptions {
  SolveBudget budget;
  // Items evaluated at most; 0 means the whole space. A cut-off scan is
  // reported as Exhausted with its partial counts.
  std::uint64_t candidate_limit = 0;
  std::size_t keep = 32;
  // 0 uses the OpenMP default.
  int workers = 0;
};

// Parallel scan over disjoint chunks of the space; the result does not
// depend on the number of workers. Throws Error(kScopeMismatch) when the
// entry and space disagree, Error(kSizeLimit) for oversized spaces, and
// Error(kDerivationFailed) if the record fails to reconcile.
SearchRecord run_scan(const TheoremEntry& entry, const SearchSpace& space,
                      const ScanOptions& options = {});

// Single-threaded reference of run_scan, used to test it.
SearchRecord run_scan_serial(const TheoremEntry& entry,
                             const SearchSpace& space,
                             const ScanOptions& options = {});

// Checked front ends of run_scan.
SearchRecord exhaustive_scan(const TheoremEntry& entry,
                             const SearchSpace& space,
                             const ScanOptions& options = {});
SearchRecord random_scan(const TheoremEntry& entry, const SearchSpace& space,
                         const ScanOptions& options = {});
// Open statements only (C1, C2, C3, P1).
SearchRecord conjecture_search(const TheoremEntry& entry,
                               const SearchSpace& space,
                               const ScanOptions& options = {});

// One JSON object. Wall-clock time is omitted unless requested so that
// repeated runs are byte-identical.
std::string to_json_line(const SearchRecord& r, bool with_timing = false);

// Writes findings under a results directory as arc-list files plus an
// append-only index.jsonl. Not thread-safe; use one sink per process.
class ResultsSink {
 public:
  explicit ResultsSink(std::filesystem::path dir);
  // Returns the files written.
  std::vector<std::filesystem::path> write(const SearchRecord& r);
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace hambypass

#endif  // HAMBYPASS_SCAN_H_
