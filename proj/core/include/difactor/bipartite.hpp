// Copyright 2026 The difactor Authors.
//
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

#ifndef DIFACTOR_BIPARTITE_HPP
#define DIFACTOR_BIPARTITE_HPP

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "difactor/digraph.hpp"

namespace difactor {

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Bipartite graph with side X mapped to global ids 0..x_count-1 and side Y
/// to x_count..x_count+y_count-1. Dense integer ids keep partner and
/// adjacency lookups O(1), which the exchange moves lean on heavily.
class BipartiteGraph {
 public:
  /// Edges given as (x index, y index) pairs, both 0-based within their side.
  BipartiteGraph(std::uint32_t x_count, std::uint32_t y_count,
                 std::vector<std::pair<Vertex, Vertex>> xy_edges);

  static BipartiteGraph complete(std::uint32_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = 0; y < n; ++y) e.emplace_back(x, y);
    return BipartiteGraph(n, n, std::move(e));
  }

  std::uint32_t x_count() const { return xc_; }
  std::uint32_t y_count() const { return yc_; }
  std::uint32_t order() const { return xc_ + yc_; }
  bool balanced() const { return xc_ == yc_; }
  bool complete_bipartite() const {
    return edges_.size() == static_cast<std::size_t>(xc_) * yc_;
  }

  Vertex x_vertex(Vertex i) const { return i; }
  Vertex y_vertex(Vertex i) const { return xc_ + i; }
  bool is_x(Vertex v) const { return v < xc_; }
  /// Side-local index of a global id.
  Vertex side_index(Vertex v) const { return is_x(v) ? v : v - xc_; }

  bool has_edge(Vertex a, Vertex b) const { return adj_[idx(a, b)] != 0; }
  std::uint32_t degree(Vertex v) const {
    return static_cast<std::uint32_t>(nbr_[v].size());
  }
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbr_[v]; }

  /// Canonical (x index, y index) edge list, sorted.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

 private:
  std::size_t idx(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a) * order() + b;
  }

  std::uint32_t xc_, yc_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::uint8_t> adj_;  // order x order, global ids
  std::vector<std::vector<Vertex>> nbr_;
};

/// Matching inside a host bipartite graph; stores the partner bijection.
class Matching {
 public:
  Matching(const BipartiteGraph& g,
           std::vector<std::pair<Vertex, Vertex>> xy_pairs);

  /// The planted matching {(i, i)}; requires those edges in g.
  static Matching identity(const BipartiteGraph& g);

  std::size_t size() const { return edges_.size(); }
  bool perfect() const { return perfect_; }
  bool covers(Vertex v) const { return partner_[v] != kNoVertex; }
  Vertex partner(Vertex v) const { return partner_[v]; }
  bool contains_edge(Vertex a, Vertex b) const {
    return partner_[a] == b;
  }
  /// Canonical (x index, y index) pairs, sorted by x.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

 private:
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<Vertex> partner_;  // global id -> global id, kNoVertex if free
  bool perfect_;
};

}  // namespace difactor

#endif  // DIFACTOR_BIPARTITE_HPP
