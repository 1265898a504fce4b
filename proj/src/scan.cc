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

#include "hambypass/scan.h"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>

#include "hambypass/error.h"
#include "hambypass/families.h"
#include "hambypass/io.h"
#include "hambypass/isomorphism.h"
#include "json.hpp"

namespace hambypass {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxExhaustiveOrder = 5;
constexpr int kMaxExhaustiveHalf = 3;
constexpr int kMaxFixedCycleHalf = 4;
constexpr int kMaxSampledOrder = 64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform double in [0, 1) from the top 53 bits; unlike the standard
// distributions this is identical across library implementations.
double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<Arc> make_cross_arcs(int a) {
  std::vector<Arc> arcs;
  for (int u = 0; u < 2 * a; ++u) {
    for (int v = 0; v < 2 * a; ++v) {
      if ((u < a) != (v < a)) arcs.push_back({u, v});
    }
  }
  return arcs;
}

const std::vector<Arc>& cross_arcs(int a) {
  static const auto table = [] {
    std::vector<std::vector<Arc>> t;
    for (int i = 0; 2 * i <= kMaxSampledOrder; ++i) t.push_back(make_cross_arcs(i));
    return t;
  }();
  return table.at(a);
}

const FixedCycleSpace& fixed_cycle_space(int a) {
  static const auto table = [] {
    std::vector<FixedCycleSpace> t;
    for (int i = 2; i <= 6; ++i) t.emplace_back(i);
    return t;
  }();
  return table.at(a - 2);
}

Digraph from_arc_mask(int order, const std::vector<Arc>& arcs,
                      std::uint64_t mask) {
  std::vector<VertexMask> out(order, 0);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (mask >> i & 1) out[arcs[i].from] |= bit(arcs[i].to);
  }
  return Digraph::from_out_masks(out);
}

std::uint64_t sampled_mask(std::uint64_t seed, std::uint64_t index,
                           std::size_t bits, double probability) {
  std::mt19937_64 rng(derive_seed(seed, index));
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < bits; ++i) {
    if (unit(rng) < probability) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

// Per-worker partial record; merging is a sum plus a lowest-index cut of the
// findings, so the merged result does not depend on the partition.
struct Tally {
  std::uint64_t enumerated = 0, skipped = 0, vacuous = 0, hypothesis = 0,
                holds = 0, exceptions = 0, counterexamples = 0,
                undecided_hypothesis = 0, undecided_conclusion = 0;
  std::map<std::string, std::uint64_t> classes;
  std::vector<Finding> counterexample_list;
  std::vector<Finding> exception_list;
};

void keep_lowest(std::vector<Finding>& list, std::size_t keep) {
  std::sort(list.begin(), list.end(),
            [](const Finding& x, const Finding& y) { return x.index < y.index; });
  if (list.size() > keep) list.resize(keep);
}

void merge_into(Tally& to, Tally&& from, std::size_t keep) {
  to.enumerated += from.enumerated;
  to.skipped += from.skipped;
  to.vacuous += from.vacuous;
  to.hypothesis += from.hypothesis;
  to.holds += from.holds;
  to.exceptions += from.exceptions;
  to.counterexamples += from.counterexamples;
  to.undecided_hypothesis += from.undecided_hypothesis;
  to.undecided_conclusion += from.undecided_conclusion;
  for (const auto& [name, n] : from.classes) to.classes[name] += n;
  for (Finding& f : from.counterexample_list) {
    to.counterexample_list.push_back(std::move(f));
  }
  for (Finding& f : from.exception_list) {
    to.exception_list.push_back(std::move(f));
  }
  keep_lowest(to.counterexample_list, keep);
  keep_lowest(to.exception_list, keep);
}

class Scanner {
 public:
  Scanner(const TheoremEntry& entry, const SearchSpace& space,
          const ScanOptions& options)
      : entry_(entry), space_(space), options_(options) {
    if (entry.bipartite && !space.bipartite()) {
      throw Error(ErrorCode::kScopeMismatch,
                  entry.id + " needs a bipartite space");
    }
    if (space.order() < entry.min_order) {
      throw Error(ErrorCode::kScopeMismatch,
                  entry.id + " needs order >= " +
                      std::to_string(entry.min_order));
    }
    total_ = space.size();
    limit_ = options.candidate_limit == 0
                 ? total_
                 : std::min(total_, options.candidate_limit);
    if (space.canonical) filter_.emplace(space.p);
  }

  std::uint64_t limit() const { return limit_; }

  void visit(std::uint64_t index, Tally& t) const {
    if (filter_ && !filter_->is_canonical(index)) {
      ++t.skipped;
      return;
    }
    ++t.enumerated;
    const SpaceItem item = space_item(space_, index);
    const EvalOptions fast{options_.budget, false};
    const TheoremVerdict v = judge(item, fast);
    switch (v.status) {
      case VerdictStatus::kVacuous:
        ++t.vacuous;
        return;
      case VerdictStatus::kUndecided:
        if (v.hypothesis) {
          ++t.hypothesis;
          ++t.undecided_conclusion;
        } else {
          ++t.undecided_hypothesis;
        }
        return;
      case VerdictStatus::kHolds:
        ++t.hypothesis;
        ++t.holds;
        return;
      case VerdictStatus::kException:
        ++t.hypothesis;
        ++t.exceptions;
        ++t.classes[std::string(exception_name(v.exception.cls))];
        remember(t.exception_list, index, item);
        return;
      case VerdictStatus::kCounterexample:
        ++t.hypothesis;
        ++t.counterexamples;
        remember(t.counterexample_list, index, item);
        return;
    }
  }

  SearchRecord finish(Tally&& t, double seconds) const {
    SearchRecord r;
    r.entry = entry_.id;
    r.space = space_;
    r.enumerated = t.enumerated;
    r.skipped = t.skipped;
    r.vacuous = t.vacuous;
    r.hypothesis = t.hypothesis;
    r.holds = t.holds;
    r.exceptions = t.exceptions;
    r.counterexample_count = t.counterexamples;
    r.undecided_hypothesis = t.undecided_hypothesis;
    r.undecided_conclusion = t.undecided_conclusion;
    r.exception_classes = std::move(t.classes);
    keep_lowest(t.counterexample_list, options_.keep);
    keep_lowest(t.exception_list, options_.keep);
    r.counterexamples = std::move(t.counterexample_list);
    r.exception_samples = std::move(t.exception_list);
    r.status = limit_ < total_ || r.undecided() > 0 ? ScanStatus::kExhausted
                                                    : ScanStatus::kComplete;
    r.seconds = seconds;
    if (!r.reconciled() || r.enumerated + r.skipped != limit_) {
      throw Error(ErrorCode::kDerivationFailed,
                  "scan counts of " + r.entry + " do not reconcile");
    }
    return r;
  }

 private:
  TheoremVerdict judge(const SpaceItem& item, const EvalOptions& o) const {
    if (entry_.bipartite) {
      return evaluate(entry_, BipartiteDigraph::build(item.digraph, *item.x_side),
                      o);
    }
    return evaluate(entry_, item.digraph, o);
  }

  void remember(std::vector<Finding>& list, std::uint64_t index,
                const SpaceItem& item) const {
    if (list.size() >= options_.keep) {
      // Later items of a chunk never displace earlier ones.
      if (options_.keep == 0 || list.back().index < index) return;
    }
    Finding f;
    f.index = index;
    f.digraph = item.digraph;
    f.x_side = item.x_side;
    f.verdict = judge(item, EvalOptions{options_.budget, true});
    list.push_back(std::move(f));
    keep_lowest(list, options_.keep);
  }

  const TheoremEntry& entry_;
  const SearchSpace& space_;
  const ScanOptions& options_;
  std::uint64_t total_ = 0;
  std::uint64_t limit_ = 0;
  std::optional<CanonicalFilter> filter_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

Json space_json(const SearchSpace& s) {
  Json j;
  j["kind"] = space_kind_name(s.kind);
  if (s.bipartite()) {
    j["a"] = s.a;
  } else {
    j["p"] = s.p;
  }
  if (s.sampled()) {
    j["probability"] = s.probability;
    if (s.kind == SpaceKind::kRandomLowVertex) {
      j["low_probability"] = s.low_probability;
    }
    j["count"] = s.count;
    j["seed"] = s.seed;
  }
  if (s.canonical) j["canonical"] = true;
  return j;
}

Json finding_json(const Finding& f) {
  Json j;
  j["index"] = f.index;
  j["p"] = f.digraph.order();
  if (f.x_side) j["x"] = members(*f.x_side);
  Json arcs = Json::array();
  for (const Arc& a : f.digraph.arcs()) arcs.push_back({a.from, a.to});
  j["arcs"] = arcs;
  if (f.verdict.exception.cls != ExceptionClass::kNone) {
    j["exception"] = exception_name(f.verdict.exception.cls);
  }
  return j;
}

}  // namespace

std::string_view space_kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::kExhaustive: return "exhaustive";
    case SpaceKind::kExhaustiveBipartite: return "exhaustive-bipartite";
    case SpaceKind::kFixedCycle: return "fixed-cycle";
    case SpaceKind::kRandom: return "random";
    case SpaceKind::kRandomBipartite: return "random-bipartite";
    case SpaceKind::kRandomFixedCycle: return "random-fixed-cycle";
    case SpaceKind::kRandomLowVertex: return "random-low-vertex";
  }
  return "?";
}

std::string_view scan_status_name(ScanStatus s) {
  return s == ScanStatus::kComplete ? "complete" : "exhausted";
}

SearchSpace SearchSpace::exhaustive(int p, bool canonical) {
  SearchSpace s;
  s.kind = SpaceKind::kExhaustive;
  s.p = p;
  s.canonical = canonical;
  return s;
}

SearchSpace SearchSpace::exhaustive_bipartite(int a) {
  SearchSpace s;
  s.kind = SpaceKind::kExhaustiveBipartite;
  s.a = a;
  return s;
}

SearchSpace SearchSpace::fixed_cycle(int a) {
  SearchSpace s;
  s.kind = SpaceKind::kFixedCycle;
  s.a = a;
  return s;
}

SearchSpace SearchSpace::random(int p, double probability,
                                std::uint64_t count, std::uint64_t seed) {
  SearchSpace s;
  s.kind = SpaceKind::kRandom;
  s.p = p;
  s.probability = probability;
  s.count = count;
  s.seed = seed;
  return s;
}

SearchSpace SearchSpace::random_low_vertex(int p, double probability,
                                           double low_probability,
                                           std::uint64_t count,
                                           std::uint64_t seed) {
  SearchSpace s = random(p, probability, count, seed);
  s.kind = SpaceKind::kRandomLowVertex;
  s.low_probability = low_probability;
  return s;
}

SearchSpace SearchSpace::random_bipartite(int a, double probability,
                                          std::uint64_t count,
                                          std::uint64_t seed) {
  SearchSpace s = random(0, probability, count, seed);
  s.kind = SpaceKind::kRandomBipartite;
  s.a = a;
  return s;
}

SearchSpace SearchSpace::random_fixed_cycle(int a, double probability,
                                            std::uint64_t count,
                                            std::uint64_t seed) {
  SearchSpace s = random(0, probability, count, seed);
  s.kind = SpaceKind::kRandomFixedCycle;
  s.a = a;
  return s;
}

bool SearchSpace::bipartite() const {
  return kind != SpaceKind::kExhaustive && kind != SpaceKind::kRandom &&
         kind != SpaceKind::kRandomLowVertex;
}

bool SearchSpace::sampled() const {
  return kind == SpaceKind::kRandom || kind == SpaceKind::kRandomBipartite ||
         kind == SpaceKind::kRandomFixedCycle ||
         kind == SpaceKind::kRandomLowVertex;
}

std::uint64_t SearchSpace::size() const {
  auto too_big = [](const std::string& what) {
    throw Error(ErrorCode::kSizeLimit, what);
  };
  if (canonical && kind != SpaceKind::kExhaustive) {
    throw Error(ErrorCode::kBadParameters,
                "canonical filtering needs an exhaustive general space");
  }
  if (sampled() && !(probability > 0 && probability < 1)) {
    throw Error(ErrorCode::kBadParameters, "arc probability must be in (0,1)");
  }
  if (kind == SpaceKind::kRandomLowVertex &&
      !(low_probability > 0 && low_probability < 1)) {
    throw Error(ErrorCode::kBadParameters,
                "low-vertex probability must be in (0,1)");
  }
  switch (kind) {
    case SpaceKind::kExhaustive:
      if (p < 1 || p > kMaxExhaustiveOrder) {
        too_big("exhaustive scans need 1 <= p <= 5");
      }
      return std::uint64_t{1} << (p * (p - 1));
    case SpaceKind::kExhaustiveBipartite:
      if (a < 1 || a > kMaxExhaustiveHalf) {
        too_big("exhaustive bipartite scans need 1 <= a <= 3");
      }
      return std::uint64_t{1} << (2 * a * a);
    case SpaceKind::kFixedCycle:
      if (a < 2 || a > kMaxFixedCycleHalf) {
        too_big("fixed-cycle scans need 2 <= a <= 4");
      }
      return fixed_cycle_space(a).size();
    case SpaceKind::kRandom:
    case SpaceKind::kRandomLowVertex:
      if (p < 1 || p > kMaxSampledOrder) too_big("sampled order out of range");
      return count;
    case SpaceKind::kRandomBipartite:
      if (a < 1 || 2 * a > kMaxSampledOrder) {
        too_big("sampled order out of range");
      }
      return count;
    case SpaceKind::kRandomFixedCycle:
      if (a < 2 || a > 6) too_big("fixed-cycle samples need 2 <= a <= 6");
      return count;
  }
  return 0;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ index);
}

SpaceItem space_item(const SearchSpace& s, std::uint64_t index) {
  switch (s.kind) {
    case SpaceKind::kExhaustive:
      return {from_adjacency_code(s.p, index), std::nullopt};
    case SpaceKind::kExhaustiveBipartite:
      return {from_arc_mask(2 * s.a, cross_arcs(s.a), index),
              full_mask(s.a)};
    case SpaceKind::kFixedCycle:
      return {fixed_cycle_space(s.a).digraph(index), full_mask(s.a)};
    case SpaceKind::kRandom:
    case SpaceKind::kRandomLowVertex: {
      const bool skew = s.kind == SpaceKind::kRandomLowVertex;
      std::mt19937_64 rng(derive_seed(s.seed, index));
      std::vector<VertexMask> out(s.p, 0);
      for (int u = 0; u < s.p; ++u) {
        for (int v = 0; v < s.p; ++v) {
          if (u == v) continue;
          const double q =
              skew && (u == 0 || v == 0) ? s.low_probability : s.probability;
          if (unit(rng) < q) out[u] |= bit(v);
        }
      }
      return {Digraph::from_out_masks(out), std::nullopt};
    }
    case SpaceKind::kRandomBipartite: {
      const std::vector<Arc>& arcs = cross_arcs(s.a);
      std::mt19937_64 rng(derive_seed(s.seed, index));
      std::vector<VertexMask> out(2 * s.a, 0);
      for (const Arc& arc : arcs) {
        if (unit(rng) < s.probability) out[arc.from] |= bit(arc.to);
      }
      return {Digraph::from_out_masks(out), full_mask(s.a)};
    }
    case SpaceKind::kRandomFixedCycle: {
      const FixedCycleSpace& space = fixed_cycle_space(s.a);
      const std::uint64_t mask =
          sampled_mask(s.seed, index, space.free_arc_list().size(),
                       s.probability);
      return {space.digraph(mask), full_mask(s.a)};
    }
  }
  throw Error(ErrorCode::kBadParameters, "unknown space");
}

bool SearchRecord::reconciled() const {
  return enumerated == vacuous + hypothesis + undecided_hypothesis &&
         hypothesis ==
             holds + exceptions + counterexample_count + undecided_conclusion &&
         counterexamples.size() <= counterexample_count &&
         exception_samples.size() <= exceptions;
}

SearchRecord run_scan(const TheoremEntry& entry, const SearchSpace& space,
                      const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Scanner scanner(entry, space, options);
  const std::uint64_t limit = scanner.limit();
  constexpr std::uint64_t kChunk = 1024;
  const auto chunks = static_cast<std::int64_t>((limit + kChunk - 1) / kChunk);
  const int workers = options.workers > 0 ? options.workers
                                          : omp_get_max_threads();
  Tally total;
  std::optional<Error> failure;
#pragma omp parallel num_threads(workers)
  {
    Tally local;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
      const std::uint64_t hi = std::min(limit, lo + kChunk);
      try {
        for (std::uint64_t i = lo; i < hi; ++i) scanner.visit(i, local);
      } catch (const Error& e) {
#pragma omp critical(hambypass_scan_failure)
        if (!failure) failure = e;
      }
    }
#pragma omp critical(hambypass_scan_merge)
    merge_into(total, std::move(local), options.keep);
  }
  if (failure) throw *failure;
  return scanner.finish(std::move(total), seconds_since(start));
}

SearchRecord run_scan_serial(const TheoremEntry& entry,
                             const SearchSpace& space,
                             const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Scanner scanner(entry, space, options);
  Tally t;
  for (std::uint64_t i = 0; i < scanner.limit(); ++i) scanner.visit(i, t);
  return scanner.finish(std::move(t), seconds_since(start));
}

SearchRecord exhaustive_scan(const TheoremEntry& entry,
                             const SearchSpace& space,
                             const ScanOptions& options) {
  if (space.sampled()) {
    throw Error(ErrorCode::kBadParameters, "exhaustive scan of a sample");
  }
  return run_scan(entry, space, options);
}

SearchRecord random_scan(const TheoremEntry& entry, const SearchSpace& space,
                         const ScanOptions& options) {
  if (!space.sampled()) {
    throw Error(ErrorCode::kBadParameters, "random scan of a full space");
  }
  return run_scan(entry, space, options);
}

SearchRecord conjecture_search(const TheoremEntry& entry,
                               const SearchSpace& space,
                               const ScanOptions& options) {
  if (entry.proved) {
    throw Error(ErrorCode::kBadParameters,
                entry.id + " is not an open statement");
  }
  return run_scan(entry, space, options);
}

std::string to_json_line(const SearchRecord& r, bool with_timing) {
  Json j;
  j["entry"] = r.entry;
  j["space"] = space_json(r.space);
  j["status"] = scan_status_name(r.status);
  Json counts;
  counts["enumerated"] = r.enumerated;
  if (r.space.canonical) counts["skipped"] = r.skipped;
  counts["vacuous"] = r.vacuous;
  counts["hypothesis"] = r.hypothesis;
  counts["holds"] = r.holds;
  counts["exceptions"] = r.exceptions;
  counts["counterexamples"] = r.counterexample_count;
  counts["undecided"] = r.undecided();
  j["counts"] = counts;
  Json classes = Json::object();
  for (const auto& [name, n] : r.exception_classes) classes[name] = n;
  j["exception_classes"] = classes;
  Json cx = Json::array();
  for (const Finding& f : r.counterexamples) cx.push_back(finding_json(f));
  j["counterexamples"] = cx;
  Json ex = Json::array();
  for (const Finding& f : r.exception_samples) ex.push_back(finding_json(f));
  j["candidate_exceptions"] = ex;
  if (with_timing) j["seconds"] = r.seconds;
  return j.dump();
}

ResultsSink::ResultsSink(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::vector<std::filesystem::path> ResultsSink::write(const SearchRecord& r) {
  std::vector<std::filesystem::path> written;
  std::ofstream index(dir_ / "index.jsonl", std::ios::app);
  if (!index) {
    throw Error(ErrorCode::kParse, "cannot open " + (dir_ / "index.jsonl").string());
  }
  const std::string space = std::string(space_kind_name(r.space.kind)) + "-" +
                            std::to_string(r.space.order()) +
                            (r.space.sampled()
                                 ? "-s" + std::to_string(r.space.seed)
                                 : "");
  auto emit = [&](const Finding& f, const char* role) {
    const std::string name = r.entry + "_" + space + "_" + role + "_" +
                             std::to_string(f.index) + ".txt";
    const std::filesystem::path path = dir_ / name;
    const std::string verdict = to_json_line(f.verdict);
    std::ofstream out(path);
    write_arclist(out, f.digraph, f.x_side,
                  {"entry " + r.entry, "space " + space,
                   "index " + std::to_string(f.index), "verdict " + verdict});
    Json line;
    line["file"] = name;
    line["entry"] = r.entry;
    line["role"] = role;
    line["space"] = space_json(r.space);
    line["index"] = f.index;
    line["verdict"] = Json::parse(verdict);
    index << line.dump() << '\n';
    written.push_back(path);
  };
  for (const Finding& f : r.counterexamples) emit(f, "counterexample");
  for (const Finding& f : r.exception_samples) emit(f, "exception");
  return written;
}

}  // namespace hambypass
