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

#include "hambypass/harness.h"

#include <algorithm>
#include <string>

#include "hambypass/error.h"
#include "hambypass/lemmas.h"
#include "json.hpp"

namespace hambypass {

namespace {

TheoremEntry make(std::string id, EntryKind kind, int min_order,
                  std::vector<ExceptionClass> exceptions, std::string summary) {
  TheoremEntry e;
  e.id = std::move(id);
  e.kind = kind;
  e.min_order = min_order;
  e.exceptions = std::move(exceptions);
  e.proved = kind == EntryKind::kTheorem || kind == EntryKind::kLemma;
  e.summary = std::move(summary);
  return e;
}

std::vector<TheoremEntry> build_registry() {
  using EC = ExceptionClass;
  constexpr auto kT = EntryKind::kTheorem;
  constexpr auto kL = EntryKind::kLemma;
  constexpr auto kC = EntryKind::kConjecture;
  std::vector<TheoremEntry> r;
  r.push_back(make("T1.1", kT, 3, {EC::kD0},
                   "2-strong, min degree >= p-1 => bypass unless D0"));
  r.push_back(make("T1.2", kT, 3, {}, "min degree >= p => bypass"));
  r.push_back(make("T1.3", kT, 3, {EC::kD0, EC::kDpkk, EC::kT5, EC::kC3},
                   "strong, d(x)+d(y) >= 2p-2 on nonadjacent pairs => bypass "
                   "unless D0, Dpkk, T5, C3"));
  r.push_back(make("T1.4", kT, 4, {EC::kT5},
                   "strong, triple condition => bypass unless T5"));
  r.push_back(make("T1.5", kT, 3, {},
                   "2-strong, d(x) >= p off z, Hamiltonian or "
                   "d(z) > (p-1)/3 => bypass"));
  TheoremEntry t16 = make("T1.6", kT, 6, {},
                          "strong balanced bipartite, 2a >= 6, A_1 => bypass");
  t16.bipartite = true;
  r.push_back(std::move(t16));
  r.push_back(make("T3.5", kT, 3, {},
                   "strong, d(x)+d(y) >= 2p-1 on nonadjacent pairs of "
                   "M = {v : d(v) >= p-1} => cycle through M"));
  TheoremEntry t41 = make("T4.1", kT, 4, {},
                          "Hamiltonian bipartite with A_l, minimal chord k: "
                          "no bypass => l = 0 and k = 2");
  t41.bipartite = true;
  r.push_back(std::move(t41));
  r.push_back(make("T5.1", kT, 3, {},
                   "2-strong, four-vertex sum >= 4p-3 => Hamiltonian"));
  r.push_back(make("L4.1", kL, 4, {EC::kDpkk},
                   "d(x) >= p off z, cycle through z of length >= p-2 => "
                   "bypass (false at p = 4)"));
  r.push_back(make("L4.2", kL, 3, {},
                   "2-strong, d(x) >= p off z, a longest path through z has "
                   "length >= p-3 and x_1 -> x_l => bypass"));
  r.push_back(make("L4.3", kL, 3, {},
                   "2-strong, d(x) >= p off z, longest cycle through z has "
                   "length p-3 => bypass"));
  r.push_back(make("L4.4", kL, 3, {},
                   "2-strong, d(x) >= p off z, longest cycle through z has "
                   "length p-4 => bypass"));
  r.push_back(make("GH", kT, 2, {}, "strong, min degree >= p => Hamiltonian"));
  r.push_back(make("C1", kC, 3, {},
                   "2-strong, p-1 vertices of degree >= p => bypass"));
  TheoremEntry c2 = make("C2", kC, 3, {},
                         "strong, four-vertex sum >= 4p-4 => bypass, except "
                         "certain digraphs");
  c2.any_recognised_exception = true;
  r.push_back(std::move(c2));
  TheoremEntry c3 = make("C3", kC, 3, {},
                         "strong, d(x)+d(y) >= 2p-1 on nonadjacent pairs => "
                         "D(n,2) for every n in [3,p], except certain digraphs");
  c3.any_recognised_exception = true;
  r.push_back(std::move(c3));
  TheoremEntry p1 = make("P1", EntryKind::kProblem, 4, {},
                         "Hamiltonian balanced bipartite with A_0: which have "
                         "a bypass?");
  p1.bipartite = true;
  r.push_back(std::move(p1));
  return r;
}

}  // namespace

const std::vector<TheoremEntry>& registry() {
  static const std::vector<TheoremEntry> entries = build_registry();
  return entries;
}

const TheoremEntry& find_entry(std::string_view id) {
  for (const TheoremEntry& e : registry()) {
    if (e.id == id) return e;
  }
  throw Error(ErrorCode::kBadParameters,
              "unknown entry '" + std::string(id) + "'");
}

std::string_view verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kVacuous: return "vacuous";
    case VerdictStatus::kHolds: return "holds";
    case VerdictStatus::kException: return "exception";
    case VerdictStatus::kCounterexample: return "counterexample";
    case VerdictStatus::kUndecided: return "undecided";
  }
  return "?";
}

std::string to_json_line(const TheoremVerdict& v) {
  nlohmann::ordered_json j;
  j["entry"] = v.entry;
  j["status"] = verdict_status_name(v.status);
  j["hypothesis"] = v.hypothesis;
  j["conclusion"] = v.conclusion;
  j["exception"] = exception_name(v.exception.cls);
  if (v.exception.cls == ExceptionClass::kDpkk) j["k"] = v.exception.k;
  nlohmann::ordered_json parts = nlohmann::ordered_json::array();
  for (const ConditionReport& r : v.parts) {
    parts.push_back(nlohmann::ordered_json::parse(to_json_line(r)));
  }
  j["parts"] = parts;
  return j.dump();
}

PathThroughProfile longest_path_through(const Digraph& d, int z) {
  const int p = d.order();
  if (p > 20) throw Error(ErrorCode::kSizeLimit, "path DP limited to p <= 20");
  if (z < 0 || z >= p) {
    throw Error(ErrorCode::kOutOfRange, "vertex " + std::to_string(z));
  }
  PathThroughProfile profile;
  const std::size_t masks = std::size_t{1} << p;
  // ends[m]: vertices e such that some path from the current start to e
  // visits exactly the vertex set m.
  std::vector<VertexMask> ends(masks);
  for (int s = 0; s < p; ++s) {
    std::fill(ends.begin(), ends.end(), 0);
    ends[bit(s)] = bit(s);
    for (std::size_t m = 0; m < masks; ++m) {
      const VertexMask e_set = ends[m];
      if (e_set == 0) continue;
      if (m & bit(z)) {
        const int len = popcount(m);
        const bool chord = len >= 3 && (d.out(s) & e_set) != 0;
        if (len > profile.max_vertices) {
          profile.max_vertices = len;
          profile.longest_has_chord = chord;
        } else if (len == profile.max_vertices && chord) {
          profile.longest_has_chord = true;
        }
      }
      for_each_vertex(e_set, [&](int e) {
        for_each_vertex(d.out(e) & ~m, [&](int c) { ends[m | bit(c)] |= bit(c); });
      });
    }
  }
  return profile;
}

namespace {

// Tri-state result of a hypothesis or conclusion check.
enum class Tri { kYes, kNo, kUnknown };

Tri from_outcome(Outcome o) {
  switch (o) {
    case Outcome::kFound: return Tri::kYes;
    case Outcome::kNotFound: return Tri::kNo;
    case Outcome::kExhausted: return Tri::kUnknown;
  }
  return Tri::kUnknown;
}

class Evaluation {
 public:
  Evaluation(const TheoremEntry& entry, const Digraph& d,
             const BipartiteDigraph* b, const EvalOptions& options)
      : entry_(entry), d_(d), b_(b), options_(options), p_(d.order()) {
    verdict_.entry = entry.id;
  }

  TheoremVerdict run();

 private:
  // Records the part and returns whether the hypothesis may still hold.
  bool part(ConditionReport r) {
    const bool holds = r.holds;
    if (options_.record_parts) verdict_.parts.push_back(std::move(r));
    return holds;
  }
  bool flag(const char* id, bool holds,
            std::map<std::string, long long> params = {}) {
    if (!options_.record_parts) return holds;
    ConditionReport r;
    r.id = id;
    r.holds = holds;
    r.params = std::move(params);
    verdict_.parts.push_back(std::move(r));
    return holds;
  }
  bool strong() { return flag("strong", is_strong(d_)); }
  bool two_strong() { return flag("2-strong", is_k_strong(d_, 2)); }
  // Vertices that may play z; records whether any exists.
  VertexMask z_candidates() {
    const VertexMask z = exceptional_vertex_candidates(d_);
    flag("one_exception_degree", z != 0, {{"candidates", popcount(z)}});
    return z;
  }

  Tri bypass() {
    if (!bypass_) bypass_ = hamiltonian_bypass(d_, options_.budget).outcome;
    return from_outcome(*bypass_);
  }
  Tri hamiltonian() {
    return from_outcome(hamiltonian_cycle(d_, options_.budget).outcome);
  }

  // Each returns the hypothesis; the conclusion is stored in conclusion_.
  Tri hyp_t15();
  Tri hyp_t35();
  Tri hyp_t41();
  Tri hyp_l41();
  Tri hyp_l42();
  Tri hyp_longest_cycle(int target);
  Tri conclusion_c3();

  const TheoremEntry& entry_;
  const Digraph& d_;
  const BipartiteDigraph* b_;
  const EvalOptions& options_;
  int p_;
  TheoremVerdict verdict_;
  std::optional<Outcome> bypass_;
  VertexMask t35_set_ = 0;
  int t41_k_ = 0;
};

Tri all(std::initializer_list<bool> parts) {
  for (bool b : parts) {
    if (!b) return Tri::kNo;
  }
  return Tri::kYes;
}

Tri Evaluation::hyp_t15() {
  if (!two_strong()) return Tri::kNo;
  const VertexMask zs = z_candidates();
  if (zs == 0) return Tri::kNo;
  bool large = false;
  int witness = -1;
  for_each_vertex(zs, [&](int z) {
    if (!large && 3 * d_.total_degree(z) > p_ - 1) {
      large = true;
      witness = z;
    }
  });
  if (large) {
    flag("d(z) > (p-1)/3", true,
         {{"z", witness}, {"d_z", d_.total_degree(witness)}});
    return Tri::kYes;
  }
  const Tri ham = hamiltonian();
  flag("hamiltonian", ham == Tri::kYes);
  return ham;
}

Tri Evaluation::hyp_t35() {
  if (!strong()) return Tri::kNo;
  for (int v = 0; v < p_; ++v) {
    if (d_.total_degree(v) >= p_ - 1) t35_set_ |= bit(v);
  }
  if (!flag("M nonempty", t35_set_ != 0, {{"size", popcount(t35_set_)}})) {
    return Tri::kNo;
  }
  return part(meyniel_like(d_, 2 * p_ - 1, t35_set_)) ? Tri::kYes : Tri::kNo;
}

Tri Evaluation::hyp_t41() {
  if (!part(bipartite_condition_A(*b_, 0))) return Tri::kNo;
  const SolveResult cycle = hamiltonian_cycle(d_, options_.budget);
  if (cycle.exhausted()) return Tri::kUnknown;
  if (!flag("hamiltonian", cycle.found())) return Tri::kNo;
  const auto chord = chord_scan(*b_, cycle.walk.vertices);
  if (!flag("chord", chord.has_value(), {{"k", chord ? chord->k : 0}})) {
    return Tri::kNo;
  }
  t41_k_ = chord->k;
  return Tri::kYes;
}

Tri Evaluation::hyp_l41() {
  const VertexMask zs = z_candidates();
  if (zs == 0) return Tri::kNo;
  bool unknown = false;
  int witness = -1;
  for_each_vertex(zs, [&](int z) {
    if (witness >= 0) return;
    const SolveResult r = cycle_through_at_least(d_, z, p_ - 2, options_.budget);
    if (r.found()) witness = z;
    if (r.exhausted()) unknown = true;
  });
  if (witness >= 0) {
    flag("cycle through z of length >= p-2", true, {{"z", witness}});
    return Tri::kYes;
  }
  if (unknown) return Tri::kUnknown;
  flag("cycle through z of length >= p-2", false);
  return Tri::kNo;
}

Tri Evaluation::hyp_l42() {
  if (!two_strong()) return Tri::kNo;
  const VertexMask zs = z_candidates();
  if (zs == 0) return Tri::kNo;
  const Tri b = bypass();
  if (b == Tri::kUnknown) return Tri::kUnknown;
  if (b == Tri::kYes) {
    // A Hamiltonian bypass is itself a longest path through every z, of
    // length p-1 >= p-3, with the chord x_1 -> x_p.
    flag("longest path through z with chord", true, {{"z", lowest(zs)}});
    return Tri::kYes;
  }
  bool holds = false;
  int witness = -1;
  for_each_vertex(zs, [&](int z) {
    if (holds) return;
    const PathThroughProfile prof = longest_path_through(d_, z);
    if (prof.max_vertices - 1 >= p_ - 3 && prof.longest_has_chord) {
      holds = true;
      witness = z;
    }
  });
  flag("longest path through z with chord", holds, {{"z", witness}});
  return holds ? Tri::kYes : Tri::kNo;
}

// Some admissible z whose longest cycle has exactly `target` vertices.
Tri Evaluation::hyp_longest_cycle(int target) {
  if (!two_strong()) return Tri::kNo;
  const VertexMask zs = z_candidates();
  if (zs == 0) return Tri::kNo;
  if (target < 2) {
    flag("longest cycle through z", false, {{"target", target}});
    return Tri::kNo;
  }
  bool unknown = false;
  int witness = -1;
  for_each_vertex(zs, [&](int z) {
    if (witness >= 0) return;
    const SolveResult longer =
        cycle_through_at_least(d_, z, target + 1, options_.budget);
    if (longer.exhausted()) unknown = true;
    if (longer.outcome != Outcome::kNotFound) return;
    const SolveResult longest = longest_cycle_through(d_, z, options_.budget);
    if (longest.exhausted()) unknown = true;
    if (longest.found() && longest.walk.size() == target) witness = z;
  });
  if (witness >= 0) {
    flag("longest cycle through z", true, {{"target", target}, {"z", witness}});
    return Tri::kYes;
  }
  if (unknown) return Tri::kUnknown;
  flag("longest cycle through z", false, {{"target", target}});
  return Tri::kNo;
}

Tri Evaluation::conclusion_c3() {
  bool unknown = false;
  for (int n = 3; n <= p_; ++n) {
    const SolveResult r = find_dnq(d_, n, 2, options_.budget);
    if (r.outcome == Outcome::kNotFound) {
      flag("contains D(n,2)", false, {{"n", n}});
      return Tri::kNo;
    }
    if (r.exhausted()) unknown = true;
  }
  return unknown ? Tri::kUnknown : Tri::kYes;
}

TheoremVerdict Evaluation::run() {
  const std::string& id = entry_.id;
  Tri hyp = Tri::kNo;
  // Conclusion defaults to "has a Hamiltonian bypass".
  enum class Goal { kBypass, kHamiltonian, kCycleThroughSet, kT41, kC3 };
  Goal goal = Goal::kBypass;

  if (id == "GH") {
    hyp = all({strong(), part(min_degree_condition(d_, p_))});
    goal = Goal::kHamiltonian;
  } else if (id == "T1.1") {
    hyp = all({two_strong(), part(min_degree_condition(d_, p_ - 1))});
  } else if (id == "T1.2") {
    hyp = all({part(min_degree_condition(d_, p_))});
  } else if (id == "T1.3") {
    hyp = all({strong(), part(meyniel_like(d_, 2 * p_ - 2))});
  } else if (id == "T1.4") {
    hyp = all({strong(), part(manoussakis_triple(d_))});
  } else if (id == "T1.5") {
    hyp = hyp_t15();
  } else if (id == "T1.6") {
    hyp = all({strong(), flag("2a >= 6", p_ >= 6),
               part(bipartite_condition_A(*b_, 1))});
  } else if (id == "T3.5") {
    hyp = hyp_t35();
    goal = Goal::kCycleThroughSet;
  } else if (id == "T4.1") {
    hyp = hyp_t41();
    goal = Goal::kT41;
  } else if (id == "T5.1") {
    hyp = all({two_strong(), part(four_vertex_condition(d_, 4 * p_ - 3))});
    goal = Goal::kHamiltonian;
  } else if (id == "L4.1") {
    hyp = hyp_l41();
  } else if (id == "L4.2") {
    hyp = hyp_l42();
  } else if (id == "L4.3") {
    hyp = hyp_longest_cycle(p_ - 3);
  } else if (id == "L4.4") {
    hyp = hyp_longest_cycle(p_ - 4);
  } else if (id == "C1") {
    hyp = all({two_strong(), part(one_exception_degree(d_))});
  } else if (id == "C2") {
    hyp = all({strong(), part(four_vertex_condition(d_, 4 * p_ - 4))});
  } else if (id == "C3") {
    hyp = all({strong(), part(meyniel_like(d_, 2 * p_ - 1))});
    goal = Goal::kC3;
  } else if (id == "P1") {
    hyp = all({part(bipartite_condition_A(*b_, 0))});
    if (hyp == Tri::kYes) {
      const Tri ham = hamiltonian();
      flag("hamiltonian", ham == Tri::kYes);
      hyp = ham;
    }
  } else {
    throw Error(ErrorCode::kBadParameters, "entry " + id + " not evaluable");
  }

  verdict_.hypothesis = hyp == Tri::kYes;
  if (hyp == Tri::kUnknown) {
    verdict_.status = VerdictStatus::kUndecided;
    return verdict_;
  }
  if (hyp == Tri::kNo) {
    verdict_.status = VerdictStatus::kVacuous;
    return verdict_;
  }

  Tri conclusion = Tri::kNo;
  switch (goal) {
    case Goal::kBypass:
      conclusion = bypass();
      break;
    case Goal::kHamiltonian:
      conclusion = hamiltonian();
      break;
    case Goal::kCycleThroughSet:
      conclusion = from_outcome(
          cycle_through_set(d_, t35_set_, options_.budget).outcome);
      break;
    case Goal::kT41: {
      conclusion = bypass();
      if (conclusion == Tri::kNo) {
        const bool a1 = bipartite_condition_A(*b_, 1).holds;
        flag("l = 0 and k = 2", !a1 && t41_k_ == 2,
             {{"A_1", a1 ? 1 : 0}, {"k", t41_k_}});
        if (!a1 && t41_k_ == 2) conclusion = Tri::kYes;
      }
      break;
    }
    case Goal::kC3:
      conclusion = conclusion_c3();
      break;
  }
  verdict_.conclusion = conclusion == Tri::kYes;
  if (conclusion == Tri::kYes) {
    verdict_.status = VerdictStatus::kHolds;
    return verdict_;
  }
  if (conclusion == Tri::kUnknown) {
    verdict_.status = VerdictStatus::kUndecided;
    return verdict_;
  }

  verdict_.status = VerdictStatus::kCounterexample;
  if (entry_.any_recognised_exception) {
    const ExceptionMatch m = classify_exception(d_);
    if (m.cls != ExceptionClass::kNone) {
      verdict_.exception = m;
      verdict_.status = VerdictStatus::kException;
    }
  } else if (!entry_.exceptions.empty()) {
    // The L4.1 statement is known to fail at p = 4 on K*_3 and K*_2 glued
    // at a vertex; that is the only order where its exception applies.
    const bool applies = id != "L4.1" || p_ == 4;
    if (applies) {
      for (const ExceptionMatch& m : matching_exceptions(d_)) {
        if (std::find(entry_.exceptions.begin(), entry_.exceptions.end(),
                      m.cls) != entry_.exceptions.end()) {
          verdict_.exception = m;
          verdict_.status = VerdictStatus::kException;
          break;
        }
      }
    }
  }
  return verdict_;
}

void check_scope(const TheoremEntry& entry, const Digraph& d) {
  if (d.order() < entry.min_order) {
    throw Error(ErrorCode::kScopeMismatch,
                entry.id + " needs order >= " +
                    std::to_string(entry.min_order) + ", got " +
                    std::to_string(d.order()));
  }
}

}  // namespace

TheoremVerdict evaluate(const TheoremEntry& entry, const Digraph& d,
                        const EvalOptions& options) {
  if (entry.bipartite) {
    throw Error(ErrorCode::kScopeMismatch,
                entry.id + " needs a bipartite digraph");
  }
  check_scope(entry, d);
  return Evaluation(entry, d, nullptr, options).run();
}

TheoremVerdict evaluate(const TheoremEntry& entry, const BipartiteDigraph& b,
                        const EvalOptions& options) {
  check_scope(entry, b.digraph());
  return Evaluation(entry, b.digraph(), &b, options).run();
}

}  // namespace hambypass
