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

#include "difactor/bipartite.hpp"

#include <algorithm>
#include <stdexcept>

namespace difactor {

BipartiteGraph::BipartiteGraph(std::uint32_t x_count, std::uint32_t y_count,
                               std::vector<std::pair<Vertex, Vertex>> xy_edges)
    : xc_(x_count), yc_(y_count), edges_(std::move(xy_edges)) {
  std::sort(edges_.begin(), edges_.end());
  adj_.assign(static_cast<std::size_t>(order()) * order(), 0);
  nbr_.assign(order(), {});
  for (auto [x, y] : edges_) {
    if (x >= xc_ || y >= yc_) throw std::invalid_argument("edge index out of range");
    const Vertex a = x_vertex(x), b = y_vertex(y);
    if (adj_[idx(a, b)]) throw std::invalid_argument("duplicate edge");
    adj_[idx(a, b)] = adj_[idx(b, a)] = 1;
    nbr_[a].push_back(b);
    nbr_[b].push_back(a);
  }
  for (auto& l : nbr_) std::sort(l.begin(), l.end());
}

Matching::Matching(const BipartiteGraph& g,
                   std::vector<std::pair<Vertex, Vertex>> xy_pairs)
    : edges_(std::move(xy_pairs)) {
  std::sort(edges_.begin(), edges_.end());
  partner_.assign(g.order(), kNoVertex);
  for (auto [x, y] : edges_) {
    if (x >= g.x_count() || y >= g.y_count())
      throw std::invalid_argument("matching edge index out of range");
    const Vertex a = g.x_vertex(x), b = g.y_vertex(y);
    if (!g.has_edge(a, b))
      throw std::invalid_argument("matching edge absent from host graph");
    if (partner_[a] != kNoVertex || partner_[b] != kNoVertex)
      throw std::invalid_argument("matching edges share an endpoint");
    partner_[a] = b;
    partner_[b] = a;
  }
  perfect_ = g.balanced() && edges_.size() == g.x_count();
}

Matching Matching::identity(const BipartiteGraph& g) {
  if (!g.balanced()) throw std::invalid_argument("identity matching needs a balanced host");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(g.x_count());
  for (Vertex i = 0; i < g.x_count(); ++i) pairs.emplace_back(i, i);
  return Matching(g, std::move(pairs));
}

}  // namespace difactor
