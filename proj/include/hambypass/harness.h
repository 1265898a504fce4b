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

#ifndef HAMBYPASS_HARNESS_H_
#define HAMBYPASS_HARNESS_H_

#include <string>
#include <string_view>
#include <vector>

#include "hambypass/conditions.h"
#include "hambypass/digraph.h"
#include "hambypass/solvers.h"

namespace hambypass {

enum class EntryKind { kTheorem, kLemma, kConjecture, kProblem };

// One statement that the harness can evaluate on a digraph: a hypothesis
// built from the predicates in conditions.h and a conclusion decided by the
// exact solvers.
struct TheoremEntry {
  std::string id;
  EntryKind kind = EntryKind::kTheorem;
  bool bipartite = false;
  // Orders below this are out of scope (bipartite: order 2a).
  int min_order = 3;
  // Counterexamples to a proved statement are build-failing events.
  bool proved = true;
  // Exception classes the statement itself excuses. For the open
  // conjectures with unnamed exceptions, any recognised class is reported
  // as a candidate exception instead.
  std::vector<ExceptionClass> exceptions;
  bool any_recognised_exception = false;
  std::string summary;
};

// T1.1 T1.2 T1.3 T1.4 T1.5 T1.6 T3.5 T4.1 T5.1 L4.1 L4.2 L4.3 L4.4 GH
// C1 C2 C3 P1.
const std::vector<TheoremEntry>& registry();
// Throws Error(kBadParameters) for an unknown id.
const TheoremEntry& find_entry(std::string_view id);

enum class VerdictStatus {
  kVacuous,         // hypothesis fails
  kHolds,           // hypothesis and conclusion hold
  kException,       // conclusion fails on an excused exception class
  kCounterexample,  // conclusion fails, nothing excuses it
  kUndecided,       // a solver ran out of budget
};

std::string_view verdict_status_name(VerdictStatus s);

struct TheoremVerdict {
  std::string entry;
  bool hypothesis = false;
  std::vector<ConditionReport> parts;
  bool conclusion = false;
  ExceptionMatch exception;
  VerdictStatus status = VerdictStatus::kVacuous;
};

std::string to_json_line(const TheoremVerdict& v);

struct EvalOptions {
  SolveBudget budget;
  // Skip building the per-condition breakdown (scans only need the status).
  bool record_parts = true;
};

// Throws Error(kScopeMismatch) when d is below the entry's minimum order or
// the entry needs a bipartition.
TheoremVerdict evaluate(const TheoremEntry& entry, const Digraph& d,
                        const EvalOptions& options = {});
TheoremVerdict evaluate(const TheoremEntry& entry, const BipartiteDigraph& b,
                        const EvalOptions& options = {});

// Longest path containing z, by subset dynamic programming (p <= 20).
struct PathThroughProfile {
  int max_vertices = 0;
  // Some path through z with max_vertices >= 3 vertices has x_1 -> x_l.
  bool longest_has_chord = false;
};
PathThroughProfile longest_path_through(const Digraph& d, int z);

}  // namespace hambypass

#endif  // HAMBYPASS_HARNESS_H_
