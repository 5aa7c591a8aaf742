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

#ifndef DIFACTOR_UNDIRECTED_HPP
#define DIFACTOR_UNDIRECTED_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "difactor/digraph.hpp"

namespace difactor {

using Edge = std::pair<Vertex, Vertex>;  // stored (min, max)

/// Simple undirected graph on 0..n-1.
class UndirectedGraph {
 public:
  UndirectedGraph(std::uint32_t n, std::vector<Edge> edges);

  static UndirectedGraph complete(std::uint32_t n);
  /// K_{a,b}: side A = 0..a-1, side B = a..a+b-1.
  static UndirectedGraph complete_bipartite(std::uint32_t a, std::uint32_t b);
  static UndirectedGraph cycle(std::uint32_t n);

  std::uint32_t order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(Vertex u, Vertex v) const { return adj_[idx(u, v)] != 0; }
  std::uint32_t degree(Vertex v) const { return deg_[v]; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbr_[v]; }

 private:
  std::size_t idx(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }

  std::uint32_t n_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::uint32_t> deg_;
  std::vector<std::vector<Vertex>> nbr_;
};

}  // namespace difactor

#endif  // DIFACTOR_UNDIRECTED_HPP
