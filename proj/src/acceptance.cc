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

#include "hambypass/acceptance.h"

#include <omp.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "hambypass/conditions.h"
#include "hambypass/error.h"
#include "hambypass/families.h"
#include "hambypass/harness.h"
#include "hambypass/isomorphism.h"
#include "hambypass/lemmas.h"
#include "hambypass/scan.h"
#include "json.hpp"

namespace hambypass {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kT12Seconds = 10;
constexpr double kT13Seconds = 30 * 60;
constexpr double kT16Seconds = 5 * 60;
constexpr double kQuickSuiteSeconds = 10 * 60;
constexpr std::uint64_t kChordInstances = 10000;

const std::array<double, 2> kProbabilities = {0.5, 0.7};

// Collects failures and counts for one criterion.
class Check {
 public:
  explicit Check(CriterionResult& r) : r_(r) {}

  void require(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failure_count_;
  }
  void note(const std::string& s) { notes_.push_back(s); }

  void record(const SearchRecord& rec) {
    r_.records.push_back(to_json_line(rec));
    require(rec.reconciled(), rec.entry + ": counts do not reconcile");
    require(rec.status == ScanStatus::kComplete,
            rec.entry + " " + std::string(space_kind_name(rec.space.kind)) +
                ": " + std::to_string(rec.undecided()) + " undecided");
  }
  // A proved statement: the record must be complete with no counterexample.
  void proved(const SearchRecord& rec) {
    record(rec);
    require(rec.counterexample_count == 0,
            rec.entry + ": " + std::to_string(rec.counterexample_count) +
                " counterexamples");
  }

  void finish() {
    r_.passed = failure_count_ == 0;
    std::string detail;
    for (const std::string& n : notes_) detail += (detail.empty() ? "" : "; ") + n;
    if (failure_count_ > 0) {
      detail += (detail.empty() ? "" : "; ") + std::string("FAILED (") +
                std::to_string(failure_count_) + "):";
      for (const std::string& f : failures_) detail += " [" + f + "]";
    }
    r_.detail = detail;
  }

 private:
  CriterionResult& r_;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
  std::uint64_t failure_count_ = 0;
};

ScanOptions scan_options(const AcceptanceOptions& o) {
  ScanOptions s;
  s.budget = o.budget;
  s.workers = o.workers;
  return s;
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

bool permutation_bypass(const Digraph& d) {
  std::vector<int> perm(d.order());
  std::iota(perm.begin(), perm.end(), 0);
  const int last = d.order() - 1;
  if (d.order() < 3) return false;
  do {
    if (!d.has_arc(perm[0], perm[last])) continue;
    bool path = true;
    for (int i = 0; i < last && path; ++i) path = d.has_arc(perm[i], perm[i + 1]);
    if (path) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

void min_degree_bypass_exhaustive(Check& c, const AcceptanceOptions& o) {
  const auto start = Clock::now();
  const SearchRecord r = exhaustive_scan(find_entry("T1.2"),
                                         SearchSpace::exhaustive(4),
                                         scan_options(o));
  c.proved(r);
  // Second oracle: permutation enumeration over every labelled digraph.
  std::uint64_t disagreements = 0;
  std::uint64_t in_hypothesis = 0;
  for (AdjacencyCode code = 0; code < 4096; ++code) {
    const Digraph d = from_adjacency_code(4, code);
    const bool oracle = permutation_bypass(d);
    const SolveResult s = hamiltonian_bypass(d, o.budget);
    if (s.exhausted() || s.found() != oracle) ++disagreements;
    bool low = false;
    for (int v = 0; v < 4; ++v) low = low || d.total_degree(v) < 4;
    if (!low) {
      ++in_hypothesis;
      c.require(oracle, "oracle finds no bypass for code " + std::to_string(code));
    }
  }
  c.require(disagreements == 0,
            std::to_string(disagreements) + " solver/oracle disagreements");
  c.require(in_hypothesis == r.hypothesis, "hypothesis counts differ");
  const double secs = since(start);
  c.require(secs < kT12Seconds, "took " + fmt_seconds(secs));
  c.note("4096 digraphs, " + std::to_string(r.hypothesis) +
         " with min degree >= 4, all with a bypass; permutation oracle agrees");
}

void meyniel_exhaustive(Check& c, const AcceptanceOptions& o) {
  const auto start = Clock::now();
  const SearchRecord r = exhaustive_scan(
      find_entry("T1.3"), SearchSpace::exhaustive(5), scan_options(o));
  c.proved(r);
  const double secs = since(start);
  c.require(secs < kT13Seconds, "took " + fmt_seconds(secs));
  std::string classes;
  for (const auto& [name, n] : r.exception_classes) {
    classes += " " + name + "=" + std::to_string(n);
  }
  c.note(std::to_string(r.enumerated) + " digraphs, " +
         std::to_string(r.hypothesis) + " satisfy the hypothesis, " +
         std::to_string(r.holds) + " with a bypass, exceptions:" + classes);
}

void bipartite_a1_exhaustive(Check& c, const AcceptanceOptions& o) {
  const auto start = Clock::now();
  const SearchRecord r = exhaustive_scan(find_entry("T1.6"),
                                         SearchSpace::exhaustive_bipartite(3),
                                         scan_options(o));
  c.proved(r);
  const double secs = since(start);
  c.require(secs < kT16Seconds, "took " + fmt_seconds(secs));
  c.note(std::to_string(r.enumerated) + " bipartite digraphs, " +
         std::to_string(r.hypothesis) + " strong with A_1, all with a bypass");
}

// x_1 y_3 x_2 y_2 x_3 y_1 under some relabeling inside each partite set.
bool has_quoted_b6_bypass(const BipartiteDigraph& b) {
  std::vector<int> xs = members(b.x_side());
  std::vector<int> ys = members(b.y_side());
  if (xs.size() != 3 || ys.size() != 3) return false;
  do {
    std::vector<int> ys_perm = ys;
    do {
      Walk w{{xs[0], ys_perm[2], xs[1], ys_perm[1], xs[2], ys_perm[0]},
             WalkKind::kBypass};
      if (is_valid(b.digraph(), w)) return true;
    } while (std::next_permutation(ys_perm.begin(), ys_perm.end()));
  } while (std::next_permutation(xs.begin(), xs.end()));
  return false;
}

void b6_derivation(Check& c, const AcceptanceOptions& o) {
  B6Derivation der;
  try {
    der = derive_B6();
  } catch (const Error& e) {
    c.require(false, e.what());
    return;
  }
  const BipartiteDigraph& b = der.fixture;
  const Digraph& d = b.digraph();
  c.require(der.classes == 1,
            std::to_string(der.classes) + " isomorphism classes");
  c.require(is_strong(d), "fixture not strong");
  c.require(bipartite_condition_A(b, 1).holds, "fixture violates A_1");
  const SolveResult ham = hamiltonian_cycle(d, o.budget);
  c.require(ham.outcome == Outcome::kNotFound,
            "Hamiltonian cycle search: " + std::string(outcome_name(ham.outcome)));
  const SolveResult byp = hamiltonian_bypass(d, o.budget);
  c.require(byp.found(), "bypass search: " + std::string(outcome_name(byp.outcome)));
  c.require(has_quoted_b6_bypass(b), "quoted bypass x1 y3 x2 y2 x3 y1 absent");
  c.note(std::to_string(der.enumerated) + " enumerated, " +
         std::to_string(der.survivors) + " strong A_1 non-Hamiltonian, " +
         std::to_string(der.classes) + " class; bypass " + to_string(byp.walk));
}

void hn_family(Check& c, const AcceptanceOptions& o) {
  for (int n = 8; n <= 16; ++n) {
    Digraph h;
    try {
      h = o.hn_generator ? o.hn_generator(n) : gen_Hn(n);
    } catch (const Error& e) {
      c.require(false, "n=" + std::to_string(n) + ": " + e.what());
      continue;
    }
    for (const std::string& issue : audit_hn(h, n, o.budget)) {
      c.require(false, "n=" + std::to_string(n) + ": " + issue);
    }
  }
  c.note("n = 8..16: degrees, 2-strong, non-Hamiltonian, quoted bypass");
}

void exception_families(Check& c, const AcceptanceOptions& o) {
  struct Case {
    std::string name;
    Digraph d;
    ExceptionClass cls;
  };
  std::vector<Case> cases;
  cases.push_back({"T5", gen_T5(), ExceptionClass::kT5});
  cases.push_back({"C3", gen_cycle(3), ExceptionClass::kC3});
  for (int p : {5, 7}) {
    cases.push_back({"D0(" + std::to_string(p) + ",empty)", gen_D0(p),
                     ExceptionClass::kD0});
    cases.push_back({"D0(" + std::to_string(p) + ",complete)",
                     gen_D0_complete_b(p), ExceptionClass::kD0});
  }
  int dpkk = 0;
  for (int p = 4; p <= 8; ++p) {
    for (int k = 1; k <= p - 2; ++k) {
      const Digraph d = gen_Dpkk(p, k);
      const std::string name =
          "Dpkk(" + std::to_string(p) + "," + std::to_string(k) + ")";
      c.require(meyniel_like(d, 2 * p - 2).holds, name + " fails 2p-2 sums");
      cases.push_back({name, d, ExceptionClass::kDpkk});
      ++dpkk;
    }
  }
  for (const Case& k : cases) {
    const SolveResult r = hamiltonian_bypass(k.d, o.budget);
    c.require(r.outcome == Outcome::kNotFound,
              k.name + ": " + std::string(outcome_name(r.outcome)));
    const std::vector<ExceptionMatch> m = matching_exceptions(k.d);
    c.require(std::any_of(m.begin(), m.end(),
                          [&](const ExceptionMatch& x) { return x.cls == k.cls; }),
              k.name + " not recognised");
  }
  c.note(std::to_string(cases.size()) + " digraphs without a bypass (" +
         std::to_string(dpkk) + " glued complete pairs, all meeting 2p-2)");
}

void insertion_exhaustive(Check& c) {
  std::uint64_t patterns = 0, covered = 0, inserted = 0;
  for (int m = 2; m <= 6; ++m) {
    std::vector<int> path(m);
    std::iota(path.begin(), path.end(), 0);
    const int x = m;
    for (std::uint32_t pattern = 0; pattern < (1u << (2 * m)); ++pattern) {
      std::vector<Arc> arcs;
      for (int i = 0; i + 1 < m; ++i) arcs.push_back({i, i + 1});
      for (int i = 0; i < m; ++i) {
        if (pattern >> i & 1) arcs.push_back({x, i});
        if (pattern >> (m + i) & 1) arcs.push_back({i, x});
      }
      const Digraph d = Digraph::build(m + 1, arcs);
      ++patterns;
      int slot = -1;
      for (int i = 0; i + 1 < m && slot < 0; ++i) {
        if (d.has_arc(i, x) && d.has_arc(x, i + 1)) slot = i;
      }
      const InsertionConditions cond = insertion_conditions(d, path, x);
      const auto w = insert_vertex(d, path, x);
      const std::string tag =
          "m=" + std::to_string(m) + " pattern=" + std::to_string(pattern);
      if (cond.any()) {
        ++covered;
        c.require(slot >= 0, tag + ": conditions hold but no slot exists");
      }
      c.require(w.has_value() == (slot >= 0), tag + ": slot disagreement");
      if (w) {
        ++inserted;
        c.require(w->position == slot, tag + ": not the lowest slot");
        c.require(is_valid(d, w->result) && w->result.size() == m + 1,
                  tag + ": invalid extended path");
      }
    }
  }
  c.note(std::to_string(patterns) + " patterns on paths of 2..6 vertices, " +
         std::to_string(covered) + " meet a condition, " +
         std::to_string(inserted) + " insertable");
}

void chord_construction(Check& c, const AcceptanceOptions& o) {
  constexpr std::array<double, 3> kDensity = {0.15, 0.3, 0.5};
  std::uint64_t k1 = 0, kj = 0, no_chord = 0, no_partner = 0, undecided = 0;
  for (std::uint64_t idx = 0; idx < kChordInstances; ++idx) {
    const int a = 3 + static_cast<int>(idx % 4);
    const double q = kDensity[(idx / 4) % kDensity.size()];
    const SpaceItem item =
        space_item(SearchSpace::random_fixed_cycle(a, q, kChordInstances, 8), idx);
    // Random relabeling so the cycle is not always the identity sequence.
    std::mt19937_64 rng(derive_seed(80, idx));
    std::vector<int> perm(2 * a);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 2 * a - 1; i > 0; --i) {
      std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
    }
    const Digraph d = permute(item.digraph, perm);
    VertexMask xs = 0;
    for_each_vertex(*item.x_side, [&](int v) { xs |= bit(perm[v]); });
    const BipartiteDigraph b = BipartiteDigraph::build(d, xs);
    std::vector<int> cycle = FixedCycleSpace(a).cycle();
    for (int& v : cycle) v = perm[v];
    const std::string tag = "instance " + std::to_string(idx);
    try {
      const auto chord = chord_scan(b, cycle);
      if (!chord) {
        ++no_chord;
        continue;
      }
      int j = 0;
      if (chord->k >= 2) {
        const auto partner = find_chord_partner(b, cycle, *chord);
        if (!partner) {
          ++no_partner;
          c.require(!bipartite_condition_A(b, 1).holds,
                    tag + ": A_1 holds but no partner j");
          continue;
        }
        j = *partner;
        ++kj;
      } else {
        ++k1;
      }
      const Walk w = bipartite_bypass_from_chord(b, cycle, *chord, j);
      c.require(w.kind == WalkKind::kBypass && w.hamiltonian(d) && is_valid(d, w),
                tag + ": constructed walk invalid");
      const SolveResult s = hamiltonian_bypass(d, o.budget);
      if (s.exhausted()) ++undecided;
      c.require(s.found(), tag + ": solver " + std::string(outcome_name(s.outcome)));
    } catch (const Error& e) {
      c.require(false, tag + ": " + e.what());
    }
  }
  c.require(k1 + kj > 0, "no instance was constructed");
  c.note(std::to_string(kChordInstances) + " instances: " + std::to_string(k1) +
         " with k=1, " + std::to_string(kj) + " with k>=2 and a partner, " +
         std::to_string(no_partner) + " without partner, " +
         std::to_string(no_chord) + " chordless");
}

void sampled_lemmas(Check& c, const AcceptanceOptions& o) {
  const std::vector<std::string> ids = {"T1.5", "L4.1", "L4.2", "L4.3", "L4.4"};
  std::map<std::string, std::uint64_t> hyp, skew_hyp;
  for (int p = 6; p <= 9; ++p) {
    for (double q : kProbabilities) {
      const SearchSpace s = SearchSpace::random(p, q, o.samples, 9);
      for (const std::string& id : ids) {
        const SearchRecord r = random_scan(find_entry(id), s, scan_options(o));
        c.proved(r);
        hyp[id] += r.hypothesis;
      }
    }
    // Supplementary sample with one sparse vertex, which the hypotheses of
    // these statements single out.
    const SearchSpace skew =
        SearchSpace::random_low_vertex(p, 0.85, 0.2, o.samples / 5, 19);
    for (const std::string& id : ids) {
      const SearchRecord r = random_scan(find_entry(id), skew, scan_options(o));
      c.proved(r);
      skew_hyp[id] += r.hypothesis;
    }
  }
  // The statement of L4.1 fails at p = 4 on K*_3 and K*_2 sharing a vertex.
  const TheoremEntry& l41 = find_entry("L4.1");
  const TheoremVerdict v = evaluate(l41, gen_Dpkk(4, 1), {o.budget, true});
  c.require(v.hypothesis && !v.conclusion, "glued K*_3 + K*_2 is not a failure");
  c.require(v.status == VerdictStatus::kException &&
                v.exception.cls == ExceptionClass::kDpkk,
            "glued K*_3 + K*_2 not reported as the expected exception");
  const SearchRecord small =
      exhaustive_scan(l41, SearchSpace::exhaustive(4), scan_options(o));
  c.proved(small);
  c.require(small.exceptions > 0, "no p=4 failures of L4.1 found");
  std::string counts;
  for (const std::string& id : ids) {
    counts += " " + id + "=" + std::to_string(hyp[id]) + "/" +
              std::to_string(skew_hyp[id]);
  }
  c.note("hypothesis met (plain/sparse-vertex samples):" + counts +
         "; p=4 failures of L4.1: " + std::to_string(small.exceptions) +
         ", all glued complete pairs");
}

void conjecture_searches(Check& c, const AcceptanceOptions& o) {
  std::map<std::string, std::uint64_t> hits, candidates, hyp;
  auto tally = [&](const SearchRecord& r) {
    c.record(r);
    hits[r.entry] += r.counterexample_count;
    candidates[r.entry] += r.exceptions;
    hyp[r.entry] += r.hypothesis;
  };
  for (int p = 3; p <= 5; ++p) {
    tally(conjecture_search(find_entry("C1"), SearchSpace::exhaustive(p),
                            scan_options(o)));
  }
  for (const char* id : {"C1", "C2", "C3"}) {
    for (int p = 6; p <= 9; ++p) {
      for (double q : kProbabilities) {
        tally(conjecture_search(find_entry(id),
                                SearchSpace::random(p, q, o.samples, 10),
                                scan_options(o)));
      }
    }
  }
  const SearchRecord p1 = conjecture_search(
      find_entry("P1"), SearchSpace::fixed_cycle(4), scan_options(o));
  tally(p1);
  c.require(p1.counterexample_count > 0,
            "no order-8 A_0 Hamiltonian digraph without a bypass");
  for (const Finding& f : p1.counterexamples) {
    const BipartiteDigraph b = BipartiteDigraph::build(f.digraph, *f.x_side);
    c.require(bipartite_condition_A(b, 0).holds &&
                  hamiltonian_cycle(f.digraph, o.budget).found() &&
                  hamiltonian_bypass(f.digraph, o.budget).outcome ==
                      Outcome::kNotFound,
              "P1 finding " + std::to_string(f.index) + " does not recheck");
  }
  std::string summary;
  for (const auto& [id, n] : hyp) {
    summary += " " + id + ": " + std::to_string(n) + " in hypothesis, " +
               std::to_string(hits[id]) + " without conclusion, " +
               std::to_string(candidates[id]) + " recognised;";
  }
  c.note("findings:" + summary);
}

void determinism(Check& c, const AcceptanceOptions& o,
                 const std::vector<CriterionResult>& earlier) {
  const std::uint64_t n = std::min<std::uint64_t>(o.samples, 20000);
  const std::vector<std::pair<std::string, SearchSpace>> runs = {
      {"T1.5", SearchSpace::random(7, 0.7, n, 11)},
      {"C2", SearchSpace::random(8, 0.5, n, 12)},
      {"T1.6", SearchSpace::exhaustive_bipartite(3)},
  };
  const int many = std::max(4, omp_get_max_threads());
  for (const auto& [id, space] : runs) {
    ScanOptions one = scan_options(o);
    one.workers = 1;
    ScanOptions several = one;
    several.workers = many;
    const TheoremEntry& e = find_entry(id);
    const std::string first = to_json_line(run_scan(e, space, one));
    c.require(first == to_json_line(run_scan(e, space, one)),
              id + ": repeated run differs");
    c.require(first == to_json_line(run_scan(e, space, several)),
              id + ": result depends on the worker count");
    c.require(first == to_json_line(run_scan_serial(e, space, one)),
              id + ": parallel and serial scans differ");
  }
  double quick = 0;
  std::vector<int> missing;
  for (int id : quick_criteria()) {
    const auto it = std::find_if(earlier.begin(), earlier.end(),
                                 [&](const CriterionResult& r) { return r.id == id; });
    if (it == earlier.end()) {
      quick += run_criterion(id, o).seconds;
    } else {
      quick += it->seconds;
    }
  }
  c.require(quick < kQuickSuiteSeconds, "quick suite took " + fmt_seconds(quick));
  c.note("3 seeded runs byte-identical across repeats, worker counts and the "
         "serial scan; quick suite " + fmt_seconds(quick));
}

const char* title_of(int id) {
  switch (id) {
    case 1: return "min degree >= p gives a bypass, exhaustive p=4";
    case 2: return "2p-2 degree sums give a bypass or a known exception, exhaustive p=5";
    case 3: return "bipartite A_1 gives a bypass, exhaustive a=3";
    case 4: return "derived 6-vertex bipartite fixture";
    case 5: return "H(n) properties for n = 8..16";
    case 6: return "exception families have no bypass";
    case 7: return "single-vertex insertion, exhaustive";
    case 8: return "bipartite chord construction on random instances";
    case 9: return "sampled low-degree-vertex statements, p = 6..9";
    case 10: return "conjecture searches";
    case 11: return "determinism and quick-suite time";
  }
  return "";
}

CriterionResult run_one(int id, const AcceptanceOptions& o,
                        const std::vector<CriterionResult>& earlier) {
  if (id < 1 || id > kCriterionCount) {
    throw Error(ErrorCode::kBadParameters,
                "criterion " + std::to_string(id) + " out of range");
  }
  CriterionResult r;
  r.id = id;
  r.title = title_of(id);
  Check c(r);
  const auto start = Clock::now();
  try {
    switch (id) {
      case 1: min_degree_bypass_exhaustive(c, o); break;
      case 2: meyniel_exhaustive(c, o); break;
      case 3: bipartite_a1_exhaustive(c, o); break;
      case 4: b6_derivation(c, o); break;
      case 5: hn_family(c, o); break;
      case 6: exception_families(c, o); break;
      case 7: insertion_exhaustive(c); break;
      case 8: chord_construction(c, o); break;
      case 9: sampled_lemmas(c, o); break;
      case 10: conjecture_searches(c, o); break;
      case 11: determinism(c, o, earlier); break;
    }
  } catch (const Error& e) {
    c.require(false, e.what());
  }
  c.finish();
  r.seconds = since(start);
  if (o.on_result) o.on_result(r);
  return r;
}

}  // namespace

const std::vector<int>& quick_criteria() {
  static const std::vector<int> ids = {1, 3, 4, 5, 6, 7};
  return ids;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  return run_one(id, options, {});
}

std::vector<CriterionResult> run_acceptance(bool quick,
                                            const AcceptanceOptions& options) {
  std::vector<int> ids = quick_criteria();
  if (!quick) {
    ids.resize(kCriterionCount);
    std::iota(ids.begin(), ids.end(), 1);
  }
  std::vector<CriterionResult> results;
  for (int id : ids) results.push_back(run_one(id, options, results));
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return !results.empty() &&
         std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.passed; });
}

std::string to_json_line(const CriterionResult& r) {
  nlohmann::ordered_json j;
  j["criterion"] = r.id;
  j["title"] = r.title;
  j["passed"] = r.passed;
  j["detail"] = r.detail;
  j["seconds"] = r.seconds;
  return j.dump();
}

std::string format_table(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  for (const CriterionResult& r : results) {
    char head[64];
    std::snprintf(head, sizeof head, "%3d  %s  %9s  ", r.id,
                  r.passed ? "PASS" : "FAIL", fmt_seconds(r.seconds).c_str());
    out << head << r.title << "\n";
    if (!r.detail.empty()) out << "                      " << r.detail << "\n";
  }
  return out.str();
}

int hn_expected_degree(int n, int vertex) {
  if (n < 8 || vertex < 0 || vertex >= n) {
    throw Error(ErrorCode::kOutOfRange, "H(n) vertex");
  }
  if (vertex >= n - 3) return n;  // y_1, y_2, y_3
  const int i = vertex;           // x_i
  if (i == 0) return 4;
  if (i <= n - 7) return n + 1;
  if (i == n - 6) return n + 4;
  if (i == n - 5) return 2 * n - 8;
  return n + 1;  // x_{n-4}
}

std::vector<std::string> audit_hn(const Digraph& h, int n, SolveBudget budget) {
  std::vector<std::string> issues;
  if (h.order() != n) {
    issues.push_back("order " + std::to_string(h.order()));
    return issues;
  }
  int high = 0;
  for (int v = 0; v < n; ++v) {
    const int got = h.total_degree(v);
    const int want = hn_expected_degree(n, v);
    if (got != want) {
      issues.push_back("d(" + h.label(v) + ") = " + std::to_string(got) +
                       ", expected " + std::to_string(want));
    }
    if (got >= n) ++high;
  }
  if (h.total_degree(0) != 4) issues.push_back("d(x0) != 4");
  if (high != n - 1) {
    issues.push_back(std::to_string(high) + " vertices of degree >= n");
  }
  if (!is_k_strong(h, 2)) issues.push_back("not 2-strong");
  const SolveResult ham = hamiltonian_cycle(h, budget);
  if (ham.outcome != Outcome::kNotFound) {
    issues.push_back("Hamiltonian cycle search: " +
                     std::string(outcome_name(ham.outcome)));
  }
  const Walk w = hn_witness_bypass(n);
  if (!is_valid(h, w) || !w.hamiltonian(h)) {
    issues.push_back("quoted bypass invalid");
  }
  return issues;
}

}  // namespace hambypass
