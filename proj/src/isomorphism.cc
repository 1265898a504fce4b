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

#include "hambypass/isomorphism.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "hambypass/error.h"

namespace hambypass {

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Digraph& d1, const Digraph& d2)
      : d1_(d1), d2_(d2), n_(d1.order()), map_(n_, -1) {
    // Most constrained vertices first: high total degree, then index.
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return d1_.total_degree(a) > d1_.total_degree(b);
    });
  }

  bool run() { return extend(0, 0); }
  const std::vector<int>& mapping() const { return map_; }

 private:
  bool extend(int depth, VertexMask used) {
    if (depth == n_) return true;
    const int u = order_[depth];
    const Degree du = d1_.degree(u);
    for (int w = 0; w < n_; ++w) {
      if (used & bit(w)) continue;
      if (!(d2_.degree(w) == du)) continue;
      if (!consistent(depth, u, w)) continue;
      map_[u] = w;
      if (extend(depth + 1, used | bit(w))) return true;
      map_[u] = -1;
    }
    return false;
  }

  bool consistent(int depth, int u, int w) const {
    for (int i = 0; i < depth; ++i) {
      const int x = order_[i];
      const int y = map_[x];
      if (d1_.has_arc(u, x) != d2_.has_arc(w, y)) return false;
      if (d1_.has_arc(x, u) != d2_.has_arc(y, w)) return false;
    }
    return true;
  }

  const Digraph& d1_;
  const Digraph& d2_;
  int n_;
  std::vector<int> order_;
  std::vector<int> map_;
};

}  // namespace

std::optional<std::vector<int>> isomorphic(const Digraph& d1,
                                           const Digraph& d2, int max_order) {
  if (d1.order() > max_order || d2.order() > max_order) {
    throw Error(ErrorCode::kSizeLimit,
                "isomorphism test limited to order " +
                    std::to_string(max_order));
  }
  if (d1.order() != d2.order() || d1.arc_count() != d2.arc_count()) {
    return std::nullopt;
  }
  if (degree_signature(d1) != degree_signature(d2)) return std::nullopt;
  IsomorphismSearch search(d1, d2);
  if (!search.run()) return std::nullopt;
  return search.mapping();
}

AdjacencyCode adjacency_code(const Digraph& d) {
  const int p = d.order();
  if (p > kMaxCodeOrder) {
    throw Error(ErrorCode::kSizeLimit, "adjacency code needs order <= 8");
  }
  AdjacencyCode code = 0;
  for (int u = 0; u < p; ++u) {
    for_each_vertex(d.out(u), [&](int v) {
      code |= AdjacencyCode{1} << arc_bit(p, u, v);
    });
  }
  return code;
}

Digraph from_adjacency_code(int order, AdjacencyCode code) {
  if (order > kMaxCodeOrder) {
    throw Error(ErrorCode::kSizeLimit, "adjacency code needs order <= 8");
  }
  VertexMask out[kMaxCodeOrder] = {};
  int b = 0;
  for (int u = 0; u < order; ++u) {
    for (int v = 0; v < order; ++v) {
      if (u == v) continue;
      if ((code >> b) & 1U) out[u] |= bit(v);
      ++b;
    }
  }
  return Digraph::from_out_masks(std::span<const VertexMask>(out, order));
}

CanonicalFilter::CanonicalFilter(int order) : order_(order) {
  if (order < 1 || order > kMaxCodeOrder) {
    throw Error(ErrorCode::kSizeLimit, "canonical filter needs order in [1,8]");
  }
  std::vector<int> perm(order);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::uint8_t> images(order * (order - 1));
    for (int u = 0; u < order; ++u) {
      for (int v = 0; v < order; ++v) {
        if (u == v) continue;
        images[arc_bit(order, u, v)] =
            static_cast<std::uint8_t>(arc_bit(order, perm[u], perm[v]));
      }
    }
    bit_images_.push_back(std::move(images));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

AdjacencyCode CanonicalFilter::canonical(AdjacencyCode code) const {
  AdjacencyCode best = code;
  for (const auto& images : bit_images_) {
    AdjacencyCode image = 0;
    AdjacencyCode rest = code;
    while (rest != 0) {
      const int b = std::countr_zero(rest);
      rest &= rest - 1;
      image |= AdjacencyCode{1} << images[b];
    }
    best = std::min(best, image);
  }
  return best;
}

bool CanonicalFilter::is_canonical(AdjacencyCode code) const {
  for (const auto& images : bit_images_) {
    AdjacencyCode image = 0;
    AdjacencyCode rest = code;
    while (rest != 0) {
      const int b = std::countr_zero(rest);
      rest &= rest - 1;
      image |= AdjacencyCode{1} << images[b];
    }
    if (image < code) return false;
  }
  return true;
}

AdjacencyCode canonical_code(const Digraph& d, int max_order) {
  if (d.order() > max_order) {
    throw Error(ErrorCode::kSizeLimit,
                "canonical code limited to order " + std::to_string(max_order));
  }
  const CanonicalFilter filter(d.order());
  return filter.canonical(adjacency_code(d));
}

}  // namespace hambypass
