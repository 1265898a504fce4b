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

// Command-line front end: generators, predicates, solvers, scans and the
// acceptance suite.

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hambypass/acceptance.h"
#include "hambypass/conditions.h"
#include "hambypass/error.h"
#include "hambypass/families.h"
#include "hambypass/harness.h"
#include "hambypass/io.h"
#include "hambypass/scan.h"
#include "hambypass/solvers.h"

namespace {

using namespace hambypass;

constexpr int kExitInputError = 3;
constexpr const char* kWorkersEnv = "HAMBYPASS_WORKERS";

int workers_from_env() {
  const char* value = std::getenv(kWorkersEnv);
  if (value == nullptr || *value == '\0') return 0;
  const int n = std::atoi(value);
  if (n < 1) {
    throw Error(ErrorCode::kBadParameters,
                std::string(kWorkersEnv) + " must be a positive integer");
  }
  omp_set_num_threads(n);
  return n;
}

struct GenArgs {
  std::string family;
  int p = 0, k = 0, n = 0, q = 0;
  std::string b_arcs;
  std::string format = "arclist";
};

int run_gen(const GenArgs& a) {
  const Family family = parse_family(a.family);
  std::optional<BipartiteDigraph> bip;
  Digraph d;
  if ((family == Family::kB6 || family == Family::kB8) &&
      a.format != "dot") {
    std::cout << regenerate_fixture(family);
    return 0;
  }
  if (family == Family::kB6) {
    bip = b6_fixture();
  } else if (family == Family::kB8) {
    const B8Search s = search_B8(FixedCycleSpace(4).size());
    if (!s.fixture) throw Error(ErrorCode::kDerivationFailed, "no witness");
    bip = *s.fixture;
  } else {
    FamilySpec spec;
    spec.family = family;
    spec.p = a.p;
    spec.k = a.k;
    spec.n = a.n;
    spec.q = a.q;
    if (!a.b_arcs.empty()) {
      spec.b_arcs = read_arclist_file(a.b_arcs).digraph.arcs();
    }
    d = generate(spec);
  }
  if (bip) d = bip->digraph();
  if (a.format == "dot") {
    write_dot(std::cout, d, std::string(family_name(family)));
  } else if (bip) {
    write_arclist(std::cout, *bip);
  } else {
    write_arclist(std::cout, d);
  }
  return 0;
}

struct CheckArgs {
  std::string input;
  std::string condition;
  std::string entry;
  std::optional<int> t, l;
  bool disjoint = false;
};

BipartiteDigraph require_bipartite(const ArcListFile& f) {
  if (!f.x_side) {
    throw Error(ErrorCode::kNotBipartite, "input has no partition line");
  }
  return f.bipartite();
}

int run_check(const CheckArgs& a) {
  const ArcListFile f = read_arclist_file(a.input);
  const Digraph& d = f.digraph;
  const int p = d.order();
  if (!a.entry.empty()) {
    const TheoremEntry& e = find_entry(a.entry);
    const TheoremVerdict v =
        e.bipartite ? evaluate(e, require_bipartite(f)) : evaluate(e, d);
    std::cout << to_json_line(v) << "\n";
    return 0;
  }
  const std::string& c = a.condition;
  ConditionReport r;
  if (c == "min-degree") {
    r = min_degree_condition(d, a.t.value_or(p));
  } else if (c == "meyniel") {
    r = meyniel_like(d, a.t.value_or(2 * p - 2));
  } else if (c == "triple") {
    r = manoussakis_triple(d);
  } else if (c == "one-exception") {
    r = one_exception_degree(d);
  } else if (c == "A") {
    r = bipartite_condition_A(require_bipartite(f), a.l.value_or(0));
  } else if (c == "four-vertex") {
    r = four_vertex_condition(d, a.t.value_or(4 * p - 3), a.disjoint);
  } else if (c == "strong") {
    const int k = a.t.value_or(1);
    r.id = "strong";
    r.holds = is_k_strong(d, k);
    r.params["k"] = k;
  } else if (c == "exception") {
    for (const ExceptionMatch& m : matching_exceptions(d)) {
      ConditionReport e;
      e.id = "exception";
      e.holds = true;
      e.clause = std::string(exception_name(m.cls));
      if (m.cls == ExceptionClass::kDpkk) e.params["k"] = m.k;
      std::cout << to_json_line(e) << "\n";
    }
    return 0;
  } else {
    throw Error(ErrorCode::kBadParameters, "unknown condition '" + c + "'");
  }
  std::cout << to_json_line(r) << "\n";
  return 0;
}

struct SolveArgs {
  std::string input;
  std::string what = "bypass";
  std::optional<int> q, n, through, from, to;
  std::uint64_t budget = 0;
};

int run_solve(const SolveArgs& a) {
  const Digraph d = read_arclist_file(a.input).digraph;
  const SolveBudget budget{a.budget};
  SolveResult r;
  if (a.what == "cycle" && a.through) {
    r = longest_cycle_through(d, *a.through, budget);
  } else if (a.what == "cycle") {
    r = hamiltonian_cycle(d, budget);
  } else if (a.what == "path") {
    r = hamiltonian_path(d, a.from, a.to, budget);
  } else if (a.what == "bypass") {
    r = hamiltonian_bypass(d, budget);
  } else if (a.what == "dnq") {
    const int q = a.q.value_or(2);
    r = a.n ? find_dnq(d, *a.n, q, budget) : find_spanning_dnq(d, q, budget);
  } else if (a.what == "longest-through") {
    if (!a.through) {
      throw Error(ErrorCode::kBadParameters, "--through is required");
    }
    r = longest_cycle_through(d, *a.through, budget);
  } else {
    throw Error(ErrorCode::kBadParameters, "unknown --what '" + a.what + "'");
  }
  if (r.found()) {
    std::cout << to_string(r.walk) << "\n";
    return 0;
  }
  std::cout << outcome_name(r.outcome) << "\n";
  return r.exhausted() ? 2 : 1;
}

struct SearchArgs {
  std::string entry;
  std::string mode = "exhaustive";
  std::optional<int> p, a;
  double prob = 0.5;
  double low_prob = 0.2;
  std::uint64_t count = 1000;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::uint64_t limit = 0;
  std::size_t keep = 32;
  bool canonical = false;
  bool timing = false;
  bool table = false;
  std::string results;
};

SearchSpace search_space(const SearchArgs& a) {
  auto need = [](const std::optional<int>& v, const char* flag) {
    if (!v) throw Error(ErrorCode::kBadParameters, std::string(flag) + " is required");
    return *v;
  };
  if (a.mode == "exhaustive") {
    if (a.a) return SearchSpace::exhaustive_bipartite(*a.a);
    return SearchSpace::exhaustive(need(a.p, "--p"), a.canonical);
  }
  if (a.mode == "fixed-cycle") return SearchSpace::fixed_cycle(need(a.a, "--a"));
  if (a.mode == "random") {
    if (a.a) return SearchSpace::random_bipartite(*a.a, a.prob, a.count, a.seed);
    return SearchSpace::random(need(a.p, "--p"), a.prob, a.count, a.seed);
  }
  if (a.mode == "random-fixed-cycle") {
    return SearchSpace::random_fixed_cycle(need(a.a, "--a"), a.prob, a.count,
                                           a.seed);
  }
  if (a.mode == "random-low-vertex") {
    return SearchSpace::random_low_vertex(need(a.p, "--p"), a.prob, a.low_prob,
                                          a.count, a.seed);
  }
  throw Error(ErrorCode::kBadParameters, "unknown --mode '" + a.mode + "'");
}

int run_search(const SearchArgs& a, int workers) {
  const TheoremEntry& entry = find_entry(a.entry);
  const SearchSpace space = search_space(a);
  ScanOptions options;
  options.budget.node_limit = a.budget;
  options.candidate_limit = a.limit;
  options.keep = a.keep;
  options.workers = workers;
  const SearchRecord r = run_scan(entry, space, options);
  std::cout << to_json_line(r, a.timing) << "\n";
  if (a.table) {
    std::cerr << entry.id << " over " << space_kind_name(space.kind)
              << " (order " << space.order() << "): " << r.enumerated
              << " enumerated, " << r.hypothesis << " in hypothesis, "
              << r.holds << " hold, " << r.exceptions << " exceptions, "
              << r.counterexample_count << " counterexamples, "
              << r.undecided() << " undecided; " << scan_status_name(r.status)
              << "\n";
  }
  if (!a.results.empty()) ResultsSink(a.results).write(r);
  return entry.proved && r.counterexample_count > 0 ? 1 : 0;
}

struct VerifyArgs {
  bool quick = false;
  bool table = false;
  bool records = false;
  std::uint64_t budget = 0;
  std::uint64_t samples = 100000;
};

int run_verify(const VerifyArgs& a, int workers) {
  AcceptanceOptions options;
  options.budget.node_limit = a.budget;
  options.samples = a.samples;
  options.workers = workers;
  options.on_result = [&](const CriterionResult& r) {
    if (a.records) {
      for (const std::string& line : r.records) std::cout << line << "\n";
    }
    std::cout << to_json_line(r) << std::endl;
  };
  const std::vector<CriterionResult> results = run_acceptance(a.quick, options);
  if (a.table) std::cerr << format_table(results);
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian bypass solvers, predicates and verification scans"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Write a named digraph");
  gen_cmd->add_option("--family", gen.family,
                      "D0, Dpkk, T5, Hn, Dnq, complete, cycle, B6, B8")
      ->required();
  gen_cmd->add_option("--p", gen.p, "order");
  gen_cmd->add_option("--k", gen.k, "Dpkk parameter");
  gen_cmd->add_option("--n", gen.n, "Hn / Dnq order");
  gen_cmd->add_option("--q", gen.q, "Dnq reversed-arc parameter");
  gen_cmd->add_option("--b-arcs", gen.b_arcs, "arc-list file for the D0 B part");
  gen_cmd->add_option("--format", gen.format)
      ->check(CLI::IsMember({"arclist", "dot"}));

  CheckArgs check;
  CLI::App* check_cmd = app.add_subcommand("check", "Evaluate a condition");
  check_cmd->add_option("--input", check.input, "arc-list file")->required();
  auto* cond_opt = check_cmd->add_option(
      "--condition", check.condition,
      "min-degree, meyniel, triple, one-exception, A, four-vertex, strong, "
      "exception");
  auto* entry_opt = check_cmd->add_option("--entry", check.entry,
                                          "evaluate a registry entry instead");
  cond_opt->excludes(entry_opt);
  check_cmd->add_option("--t", check.t, "threshold");
  check_cmd->add_option("--l", check.l, "A_l level");
  check_cmd->add_flag("--disjoint", check.disjoint,
                      "four-vertex: only pairs without a common vertex");

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run an exact solver");
  solve_cmd->add_option("--input", solve.input, "arc-list file")->required();
  solve_cmd->add_option("--what", solve.what)
      ->check(CLI::IsMember({"cycle", "path", "bypass", "dnq", "longest-through"}));
  solve_cmd->add_option("--q", solve.q);
  solve_cmd->add_option("--n", solve.n, "dnq: order of the subdigraph");
  solve_cmd->add_option("--through", solve.through,
                        "cycle: longest cycle through this vertex");
  solve_cmd->add_option("--from", solve.from);
  solve_cmd->add_option("--to", solve.to);
  solve_cmd->add_option("--budget", solve.budget, "node limit, 0 = none");

  SearchArgs search;
  CLI::App* search_cmd = app.add_subcommand("search", "Scan a digraph space");
  search_cmd->add_option("--entry", search.entry)->required();
  search_cmd->add_option("--mode", search.mode)
      ->check(CLI::IsMember({"exhaustive", "random", "fixed-cycle",
                             "random-fixed-cycle", "random-low-vertex"}));
  search_cmd->add_option("--p", search.p);
  search_cmd->add_option("--a", search.a, "half order of bipartite spaces");
  search_cmd->add_option("--prob", search.prob);
  search_cmd->add_option("--low-prob", search.low_prob);
  search_cmd->add_option("--count", search.count);
  search_cmd->add_option("--seed", search.seed);
  search_cmd->add_option("--budget", search.budget, "node limit per solver call");
  search_cmd->add_option("--limit", search.limit, "items scanned at most");
  search_cmd->add_option("--keep", search.keep, "findings kept per list");
  search_cmd->add_flag("--canonical", search.canonical);
  search_cmd->add_flag("--timing", search.timing, "include wall-clock time");
  search_cmd->add_flag("--table", search.table, "summary on stderr");
  search_cmd->add_option("--results", search.results, "results directory");

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify-paper", "Run the acceptance suite");
  verify_cmd->add_flag("--quick", verify.quick, "criteria 1, 3, 4, 5, 6, 7");
  verify_cmd->add_flag("--table", verify.table, "summary table on stderr");
  verify_cmd->add_flag("--records", verify.records, "print scan records");
  verify_cmd->add_option("--budget", verify.budget, "node limit per solver call");
  verify_cmd->add_option("--samples", verify.samples, "samples per cell");

  CLI11_PARSE(app, argc, argv);

  try {
    const int workers = workers_from_env();
    if (*gen_cmd) return run_gen(gen);
    if (*check_cmd) {
      if (check.condition.empty() && check.entry.empty()) {
        throw Error(ErrorCode::kBadParameters, "--condition or --entry is required");
      }
      return run_check(check);
    }
    if (*solve_cmd) return run_solve(solve);
    if (*search_cmd) return run_search(search, workers);
    if (*verify_cmd) return run_verify(verify, workers);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return 0;
}
