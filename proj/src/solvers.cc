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

#include "hambypass/solvers.h"

#include <algorithm>
#include <array>
#include <string>

#include "hambypass/error.h"

namespace hambypass {

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kFound: return "Found";
    case Outcome::kNotFound: return "NotFound";
    case Outcome::kExhausted: return "Exhausted";
  }
  return "?";
}

namespace {

struct OutOfBudget {};

class NodeCounter {
 public:
  explicit NodeCounter(SolveBudget budget) : limit_(budget.node_limit) {}

  void tick() {
    ++nodes_;
    if (limit_ != 0 && nodes_ > limit_) throw OutOfBudget{};
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
};

// Depth-first search for a path of exactly `length` vertices inside `within`
// that starts at a fixed vertex and ends in `terminals`. When the path must
// cover `within` completely the search prunes on vertices that have lost
// every possible predecessor or successor.
class PathSearch {
 public:
  PathSearch(const Digraph& d, VertexMask within, int length,
             VertexMask terminals, NodeCounter& counter)
      : d_(d),
        within_(within),
        length_(length),
        terminals_(terminals),
        spanning_(length == popcount(within)),
        counter_(counter) {}

  bool run(int start) {
    if (!(within_ & bit(start))) return false;
    path_[0] = start;
    if (length_ == 1) return (terminals_ & bit(start)) != 0;
    return extend(start, bit(start), 1);
  }

  std::vector<int> path() const {
    return std::vector<int>(path_.begin(), path_.begin() + length_);
  }

 private:
  bool extend(int tail, VertexMask visited, int depth) {
    counter_.tick();
    const VertexMask unvisited = within_ & ~visited;
    VertexMask candidates = d_.out(tail) & unvisited;
    if (depth + 1 == length_) {
      candidates &= terminals_;
      if (candidates == 0) return false;
      path_[depth] = lowest(candidates);
      return true;
    }
    if (spanning_ && !feasible(tail, unvisited)) return false;

    // Fail-first: fewest onward options first, ties by index.
    std::array<std::pair<int, int>, kMaxOrder> order;
    int n = 0;
    for_each_vertex(candidates, [&](int c) {
      order[n++] = {popcount(d_.out(c) & unvisited), c};
    });
    std::sort(order.begin(), order.begin() + n);
    for (int i = 0; i < n; ++i) {
      const int c = order[i].second;
      path_[depth] = c;
      if (extend(c, visited | bit(c), depth + 1)) return true;
    }
    return false;
  }

  // Every unvisited vertex needs a predecessor among unvisited vertices or
  // the tail, and a successor among unvisited vertices unless it ends the
  // path, which only a terminal may do, and only one vertex can.
  bool feasible(int tail, VertexMask unvisited) const {
    if ((unvisited & terminals_) == 0) return false;
    const VertexMask preds = unvisited | bit(tail);
    int dead_ends = 0;
    VertexMask rest = unvisited;
    while (rest != 0) {
      const int u = lowest(rest);
      rest &= rest - 1;
      if ((d_.in(u) & preds) == 0) return false;
      if ((d_.out(u) & unvisited) == 0) {
        if (!(terminals_ & bit(u)) || ++dead_ends > 1) return false;
      }
    }
    return true;
  }

  const Digraph& d_;
  VertexMask within_;
  int length_;
  VertexMask terminals_;
  bool spanning_;
  NodeCounter& counter_;
  std::array<int, kMaxOrder> path_{};
};

SolveResult finish(Outcome outcome, Walk walk, const NodeCounter& counter) {
  return SolveResult{outcome, std::move(walk), counter.nodes()};
}

void check_vertex(const Digraph& d, int v) {
  if (v < 0 || v >= d.order()) {
    throw Error(ErrorCode::kOutOfRange, "vertex " + std::to_string(v));
  }
}

}  // namespace

SolveResult hamiltonian_cycle(const Digraph& d, SolveBudget budget) {
  NodeCounter counter(budget);
  const int p = d.order();
  if (p < 2) return finish(Outcome::kNotFound, {}, counter);
  try {
    PathSearch search(d, d.vertices(), p, d.in(0), counter);
    if (search.run(0)) {
      return finish(Outcome::kFound, {search.path(), WalkKind::kCycle},
                    counter);
    }
  } catch (const OutOfBudget&) {
    return finish(Outcome::kExhausted, {}, counter);
  }
  return finish(Outcome::kNotFound, {}, counter);
}

SolveResult hamiltonian_path(const Digraph& d, std::optional<int> from,
                             std::optional<int> to, SolveBudget budget) {
  if (from) check_vertex(d, *from);
  if (to) check_vertex(d, *to);
  if (from && to && *from == *to) {
    throw Error(ErrorCode::kBadParameters, "from and to coincide");
  }
  NodeCounter counter(budget);
  const int p = d.order();
  if (p == 0) return finish(Outcome::kNotFound, {}, counter);
  const VertexMask terminals = to ? bit(*to) : d.vertices();
  try {
    for (int s = 0; s < p; ++s) {
      if (from && s != *from) continue;
      if (to && s == *to && p > 1) continue;
      PathSearch search(d, d.vertices(), p, terminals, counter);
      if (search.run(s)) {
        return finish(Outcome::kFound, {search.path(), WalkKind::kPath},
                      counter);
      }
    }
  } catch (const OutOfBudget&) {
    return finish(Outcome::kExhausted, {}, counter);
  }
  return finish(Outcome::kNotFound, {}, counter);
}

SolveResult hamiltonian_bypass(const Digraph& d, SolveBudget budget) {
  NodeCounter counter(budget);
  const int p = d.order();
  if (p < 3) return finish(Outcome::kNotFound, {}, counter);
  try {
    for (int s = 0; s < p; ++s) {
      if (d.out(s) == 0) continue;
      PathSearch search(d, d.vertices(), p, d.out(s), counter);
      if (search.run(s)) {
        return finish(Outcome::kFound, {search.path(), WalkKind::kBypass},
                      counter);
      }
    }
  } catch (const OutOfBudget&) {
    return finish(Outcome::kExhausted, {}, counter);
  }
  return finish(Outcome::kNotFound, {}, counter);
}

namespace {

class LongestCycleSearch {
 public:
  // Stops as soon as a cycle with `enough` vertices is recorded. With
  // prune_short set, branches that cannot reach `enough` are cut as well.
  LongestCycleSearch(const Digraph& d, int z, int enough, bool prune_short,
                     NodeCounter& counter)
      : d_(d), z_(z), enough_(enough), prune_short_(prune_short),
        counter_(counter) {}

  void run() {
    path_.push_back(z_);
    extend(z_, bit(z_));
  }

  const std::vector<int>& best() const { return best_; }

 private:
  void extend(int tail, VertexMask visited) {
    counter_.tick();
    const int len = static_cast<int>(path_.size());
    if (len >= 2 && d_.has_arc(tail, z_) && len > static_cast<int>(best_.size())) {
      best_ = path_;
      if (len >= enough_) return;
    }
    const VertexMask unvisited = d_.vertices() & ~visited;
    // Vertices still usable: reachable from the tail and able to reach z.
    const VertexMask usable =
        reachable_from(d_, tail, unvisited | bit(tail)) &
        reaching_to(d_, z_, unvisited | bit(z_)) & unvisited;
    const int reachable = len + popcount(usable);
    if (reachable <= static_cast<int>(best_.size())) return;
    if (prune_short_ && reachable < enough_) return;
    VertexMask candidates = d_.out(tail) & usable;
    while (candidates != 0) {
      const int c = lowest(candidates);
      candidates &= candidates - 1;
      path_.push_back(c);
      extend(c, visited | bit(c));
      path_.pop_back();
      if (static_cast<int>(best_.size()) >= enough_) return;
    }
  }

  const Digraph& d_;
  int z_;
  int enough_;
  bool prune_short_;
  NodeCounter& counter_;
  std::vector<int> path_;
  std::vector<int> best_;
};

class SetCycleSearch {
 public:
  SetCycleSearch(const Digraph& d, VertexMask m, NodeCounter& counter)
      : d_(d), m_(m), root_(lowest(m)), counter_(counter) {}

  bool run() {
    path_.push_back(root_);
    return extend(root_, bit(root_));
  }

  const std::vector<int>& path() const { return path_; }

 private:
  bool extend(int tail, VertexMask visited) {
    counter_.tick();
    const VertexMask missing = m_ & ~visited;
    if (path_.size() >= 2 && missing == 0 && d_.has_arc(tail, root_)) {
      return true;
    }
    const VertexMask unvisited = d_.vertices() & ~visited;
    const VertexMask forward = reachable_from(d_, tail, unvisited | bit(tail));
    if ((missing & ~forward) != 0) return false;
    const VertexMask back = reaching_to(d_, root_, unvisited | bit(root_));
    if ((missing & ~back) != 0) return false;
    VertexMask candidates = d_.out(tail) & unvisited & forward & back;
    while (candidates != 0) {
      const int c = lowest(candidates);
      candidates &= candidates - 1;
      path_.push_back(c);
      if (extend(c, visited | bit(c))) return true;
      path_.pop_back();
    }
    return false;
  }

  const Digraph& d_;
  VertexMask m_;
  int root_;
  NodeCounter& counter_;
  std::vector<int> path_;
};

}  // namespace

SolveResult longest_cycle_through(const Digraph& d, int z,
                                  SolveBudget budget) {
  check_vertex(d, z);
  NodeCounter counter(budget);
  LongestCycleSearch search(d, z, d.order(), false, counter);
  try {
    search.run();
  } catch (const OutOfBudget&) {
    return finish(Outcome::kExhausted, {}, counter);
  }
  if (search.best().empty()) return finish(Outcome::kNotFound, {}, counter);
  return finish(Outcome::kFound, {search.best(), WalkKind::kCycle}, counter);
}

SolveResult cycle_through_at_least(const Digraph& d, int z, int min_length,
                                   SolveBudget budget) {
  check_vertex(d, z);
  NodeCounter counter(budget);
  LongestCycleSearch search(d, z, std::max(min_length, 2), true, counter);
  try {
    search.run();
  } catch (const OutOfBudget&) {
    return finish(Outcome::kExhausted, {}, counter);
  }
  if (search.best().size() < static_cast<std::size_t>(std::max(min_length, 2))) {
    return finish(Outcome::kNotFound, {}, counter);
  }
  return finish(Outcome::kFound, {search.best(), WalkKind::kCycle}, counter);
}

SolveResult cycle_through_set(const Digraph& d, VertexMask m,
                              SolveBudget budget) {
  if (m == 0) throw Error(ErrorCode::kBadParameters, "empty vertex set");
  if (m & ~d.vertices()) {
    throw Error(ErrorCode::kOutOfRange, "vertex set leaves V(D)");
  }
  NodeCounter counter(budget);
  SetCycleSearch search(d, m, counter);
  try {
    if (search.run()) {
      return finish(Outcome::kFound, {search.path(), WalkKind::kCycle},
                    counter);
    }
  } catch (const OutOfBudget&) {
    return finish(Outcome::kExhausted, {}, counter);
  }
  return finish(Outcome::kNotFound, {}, counter);
}

bool is_dnq(const Digraph& d, std::span<const int> seq, int q) {
  const int n = static_cast<int>(seq.size());
  if (n < 3 || q < 2 || q > n) return false;
  VertexMask seen = 0;
  for (int v : seq) {
    if (v < 0 || v >= d.order() || (seen & bit(v))) return false;
    seen |= bit(v);
  }
  // 0-based: forward arcs seq[i] -> seq[i+1] for i < n-q+1, the reversed
  // closing arc seq[0] -> seq[n-1], and seq[i+1] -> seq[i] for the rest.
  for (int i = 0; i < n - q + 1; ++i) {
    if (!d.has_arc(seq[i], seq[i + 1])) return false;
  }
  if (!d.has_arc(seq[0], seq[n - 1])) return false;
  for (int i = n - q + 1; i < n - 1; ++i) {
    if (!d.has_arc(seq[i + 1], seq[i])) return false;
  }
  return true;
}

namespace {

// Second leg of D(n, q): a path start -> u_1 -> ... -> u_k -> target through
// k fresh vertices of `pool`.
class LegSearch {
 public:
  LegSearch(const Digraph& d, int start, int target, int interior,
            VertexMask pool, NodeCounter& counter)
      : d_(d), start_(start), target_(target), interior_(interior),
        pool_(pool), counter_(counter) {}

  bool run() {
    if (interior_ == 0) return d_.has_arc(start_, target_);
    return extend(start_, 0);
  }
  const std::vector<int>& leg() const { return leg_; }

 private:
  bool extend(int tail, VertexMask used) {
    counter_.tick();
    if (static_cast<int>(leg_.size()) == interior_) {
      return d_.has_arc(tail, target_);
    }
    VertexMask candidates = d_.out(tail) & pool_ & ~used;
    if (static_cast<int>(leg_.size()) + 1 == interior_) {
      candidates &= d_.in(target_);
    }
    while (candidates != 0) {
      const int c = lowest(candidates);
      candidates &= candidates - 1;
      leg_.push_back(c);
      if (extend(c, used | bit(c))) return true;
      leg_.pop_back();
    }
    return false;
  }

  const Digraph& d_;
  int start_;
  int target_;
  int interior_;
  VertexMask pool_;
  NodeCounter& counter_;
  std::vector<int> leg_;
};

// First leg: path v_1 ... v_{n-q+2}; on completion try the second leg.
class DnqSearch {
 public:
  DnqSearch(const Digraph& d, int n, int q, NodeCounter& counter)
      : d_(d), n_(n), q_(q), first_len_(n - q + 2), counter_(counter) {}

  bool run(int start) {
    first_.assign(1, start);
    return extend(start, bit(start));
  }
  std::vector<int> sequence() const {
    std::vector<int> seq = first_;
    seq.insert(seq.end(), second_.rbegin(), second_.rend());
    return seq;
  }

 private:
  bool extend(int tail, VertexMask used) {
    counter_.tick();
    if (static_cast<int>(first_.size()) == first_len_) {
      LegSearch leg(d_, first_.front(), tail, q_ - 2,
                    d_.vertices() & ~used, counter_);
      if (!leg.run()) return false;
      second_ = leg.leg();
      return true;
    }
    VertexMask candidates = d_.out(tail) & ~used;
    if (q_ == 2 && static_cast<int>(first_.size()) + 1 == first_len_) {
      candidates &= d_.out(first_.front());
    }
    while (candidates != 0) {
      const int c = lowest(candidates);
      candidates &= candidates - 1;
      first_.push_back(c);
      if (extend(c, used | bit(c))) return true;
      first_.pop_back();
    }
    return false;
  }

  const Digraph& d_;
  int n_;
  int q_;
  int first_len_;
  NodeCounter& counter_;
  std::vector<int> first_;
  std::vector<int> second_;
};

}  // namespace

SolveResult find_dnq(const Digraph& d, int n, int q, SolveBudget budget) {
  if (n < 3 || q < 2 || q > n) {
    throw Error(ErrorCode::kBadParameters,
                "D(n,q) needs n >= 3 and q in [2,n], got n=" +
                    std::to_string(n) + " q=" + std::to_string(q));
  }
  NodeCounter counter(budget);
  const WalkKind kind = q == 2 ? WalkKind::kBypass : WalkKind::kPath;
  if (n > d.order()) return finish(Outcome::kNotFound, {}, counter);
  try {
    if (q == 2 && n == d.order()) {
      // Spanning D(p,2) is a Hamiltonian bypass; reuse the pruned search.
      for (int s = 0; s < n; ++s) {
        if (d.out(s) == 0) continue;
        PathSearch search(d, d.vertices(), n, d.out(s), counter);
        if (search.run(s)) {
          return finish(Outcome::kFound, {search.path(), kind}, counter);
        }
      }
      return finish(Outcome::kNotFound, {}, counter);
    }
    for (int s = 0; s < d.order(); ++s) {
      DnqSearch search(d, n, q, counter);
      if (search.run(s)) {
        return finish(Outcome::kFound, {search.sequence(), kind}, counter);
      }
    }
  } catch (const OutOfBudget&) {
    return finish(Outcome::kExhausted, {}, counter);
  }
  return finish(Outcome::kNotFound, {}, counter);
}

SolveResult find_spanning_dnq(const Digraph& d, int q, SolveBudget budget) {
  if (d.order() < 3) return SolveResult{};
  return find_dnq(d, d.order(), q, budget);
}

}  // namespace hambypass
