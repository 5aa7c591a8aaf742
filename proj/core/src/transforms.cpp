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

#include "difactor/transforms.hpp"

#include <numeric>
#include <stdexcept>

#include "difactor/verify.hpp"

namespace difactor {

Digraph symmetrize(const UndirectedGraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.edges().size());
  for (auto [u, v] : g.edges()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return Digraph(g.order(), std::move(arcs));
}

std::tuple<BipartiteGraph, Matching, CorrespondenceTag> digraph_to_bipartite(
    const Digraph& d) {
  const std::uint32_t n = d.order();
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(n + d.arc_count());
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, v);
  for (auto [u, v] : d.arcs()) edges.emplace_back(u, v);

  BipartiteGraph g(n, n, std::move(edges));
  Matching m = Matching::identity(g);
  CorrespondenceTag tag{CorrespondenceTag::Direction::split, {}};
  tag.y_of.resize(n);
  std::iota(tag.y_of.begin(), tag.y_of.end(), 0);
  return {std::move(g), std::move(m), std::move(tag)};
}

std::pair<Digraph, CorrespondenceTag> bipartite_to_digraph(
    const BipartiteGraph& g, const Matching& m) {
  if (!g.balanced()) throw std::invalid_argument("host must be balanced");
  if (!m.perfect()) throw std::invalid_argument("matching must be perfect");

  const std::uint32_t n = g.x_count();
  // Digraph vertex u is the matching edge with X index u.
  std::vector<Arc> arcs;
  for (auto [x, y] : g.edges()) {
    const Vertex xv = g.x_vertex(x), yv = g.y_vertex(y);
    if (m.contains_edge(xv, yv)) continue;
    const Vertex target = m.partner(yv);  // X end of y's matching edge
    arcs.emplace_back(x, target);
  }
  CorrespondenceTag tag{CorrespondenceTag::Direction::contract, {}};
  tag.y_of.resize(n);
  for (Vertex v = 0; v < n; ++v)
    tag.y_of[v] = g.side_index(m.partner(g.x_vertex(v)));
  return {Digraph(n, std::move(arcs)), std::move(tag)};
}

DirectedTwoFactor translate_m2factor(const BipartiteGraph& g,
                                     const Matching& m, const MTwoFactor& f,
                                     const CorrespondenceTag& tag) {
  if (tag.direction != CorrespondenceTag::Direction::contract)
    throw std::invalid_argument("translation needs a contract-direction tag");
  const auto rep = verify_m_2factor(g, m, f,
                                    static_cast<std::uint32_t>(f.cycles.size()),
                                    4);
  if (!rep.passed)
    throw std::invalid_argument("cannot translate an invalid alternating 2-factor");

  DirectedTwoFactor out;
  for (const auto& ring : f.cycles) {
    // Orient so matching edges are crossed Y -> X; reading the X indices
    // then follows the arcs forward.
    const std::size_t len = ring.size();
    std::size_t start = 0;
    while (!g.is_x(ring[start])) ++start;
    const bool forward = !m.contains_edge(ring[start], ring[(start + 1) % len]);
    std::vector<Vertex> cyc;
    cyc.reserve(len / 2);
    for (std::size_t i = 0; i < len; ++i) {
      const Vertex v =
          forward ? ring[(start + i) % len] : ring[(start + len - i) % len];
      if (g.is_x(v)) cyc.push_back(g.side_index(v));
    }
    out.cycles.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace difactor
