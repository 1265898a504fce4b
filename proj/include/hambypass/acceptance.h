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

#ifndef HAMBYPASS_ACCEPTANCE_H_
#define HAMBYPASS_ACCEPTANCE_H_

#include <functional>
#include <string>
#include <vector>

#include "hambypass/digraph.h"
#include "hambypass/solvers.h"

namespace hambypass {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  // SearchRecord lines produced while checking the criterion.
  std::vector<std::string> records;
};

struct AcceptanceOptions {
  // Per solver call; a tiny budget makes the criteria report undecided
  // outcomes and fail.
  SolveBudget budget;
  int workers = 0;
  // Samples per (order, probability) cell of the sampled criteria.
  std::uint64_t samples = 100000;
  // Replaces gen_Hn in criterion 5.
  std::function<Digraph(int)> hn_generator;
  // Called as each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

inline constexpr int kCriterionCount = 11;

// The criteria of the quick suite: 1, 3, 4, 5, 6, 7.
const std::vector<int>& quick_criteria();

// Throws Error(kBadParameters) for an id outside [1, 11].
CriterionResult run_criterion(int id, const AcceptanceOptions& options);
// All criteria, or the quick ones, in id order.
std::vector<CriterionResult> run_acceptance(bool quick,
                                            const AcceptanceOptions& options);

bool all_passed(const std::vector<CriterionResult>& results);
std::string to_json_line(const CriterionResult& r);
// One "criterion  PASS/FAIL  seconds  title" row per result.
std::string format_table(const std::vector<CriterionResult>& results);

// Degree of each vertex of H(n) computed from its arc-set clauses by hand,
// independently of the generator (vertex numbering as in gen_Hn).
int hn_expected_degree(int n, int vertex);

// Every discrepancy between `h` and the published properties of H(n): order,
// per-vertex degrees, 2-strong, non-Hamiltonian, the quoted bypass. Empty
// when `h` passes.
std::vector<std::string> audit_hn(const Digraph& h, int n,
                                  SolveBudget budget = {});

}  // namespace hambypass

#endif  // HAMBYPASS_ACCEPTANCE_H_
