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

// Runs every acceptance criterion and prints one PASS/FAIL line per
// criterion. Exits nonzero if any criterion fails. Pass --quick for the
// quick subset.

#include <cstdio>
#include <cstring>
#include <iostream>

#include "hambypass/acceptance.h"

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;
  }
  hambypass::AcceptanceOptions options;
  options.on_result = [](const hambypass::CriterionResult& r) {
    std::printf("criterion %2d %s (%.1f s) %s: %s\n", r.id,
                r.passed ? "PASS" : "FAIL", r.seconds, r.title.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
  };
  const auto results = hambypass::run_acceptance(quick, options);
  const bool ok = hambypass::all_passed(results);
  std::cout << (ok ? "all criteria passed" : "some criteria FAILED") << "\n";
  return ok ? 0 : 1;
}
