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

#include "difactor/undirected.hpp"

#include <algorithm>
#include <stdexcept>

namespace difactor {

UndirectedGraph::UndirectedGraph(std::uint32_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
  deg_.assign(n_, 0);
  nbr_.assign(n_, {});
  for (auto [u, v] : edges_) {
    if (v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop edge");
    if (adj_[idx(u, v)]) throw std::invalid_argument("duplicate edge");
    adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
    ++deg_[u];
    ++deg_[v];
    nbr_[u].push_back(v);
    nbr_[v].push_back(u);
  }
  for (auto& l : nbr_) std::sort(l.begin(), l.end());
}

UndirectedGraph UndirectedGraph::complete(std::uint32_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph UndirectedGraph::complete_bipartite(std::uint32_t a,
                                                    std::uint32_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) edges.emplace_back(u, v);
  return UndirectedGraph(a + b, std::move(edges));
}

UndirectedGraph UndirectedGraph::cycle(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs order >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return UndirectedGraph(n, std::move(edges));
}

}  // namespace difactor
