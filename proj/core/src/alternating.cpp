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

#include "difactor/alternating.hpp"

#include <algorithm>
#include <stdexcept>

namespace difactor {

namespace {

void check_distinct(const std::vector<Vertex>& verts, std::uint32_t order) {
  std::vector<std::uint8_t> seen(order, 0);
  for (Vertex v : verts) {
    if (v >= order) throw std::invalid_argument("vertex out of range");
    if (seen[v]) throw std::invalid_argument("repeated vertex");
    seen[v] = 1;
  }
}

}  // namespace

MPath MPath::of(const BipartiteGraph& g, const Matching& m,
                std::vector<Vertex> verts) {
  if (verts.size() < 2 || verts.size() % 2 != 0)
    throw std::invalid_argument("alternating path needs even order >= 2");
  check_distinct(verts, g.order());
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    const Vertex a = verts[i], b = verts[i + 1];
    if (!g.has_edge(a, b)) throw std::invalid_argument("path edge absent");
    const bool in_m = m.contains_edge(a, b);
    if (in_m != (i % 2 == 0))
      throw std::invalid_argument("path does not alternate from a matching edge");
  }
  return MPath(std::move(verts));
}

MCycle MCycle::of(const BipartiteGraph& g, const Matching& m,
                  std::vector<Vertex> ring) {
  const std::size_t len = ring.size();
  if (len < 4 || len % 2 != 0)
    throw std::invalid_argument("alternating cycle needs even length >= 4");
  check_distinct(ring, g.order());
  std::size_t m_edges = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex a = ring[i], b = ring[(i + 1) % len];
    if (!g.has_edge(a, b)) throw std::invalid_argument("cycle edge absent");
    const bool in_m = m.contains_edge(a, b);
    if (i > 0 && in_m == m.contains_edge(ring[i - 1], a))
      throw std::invalid_argument("cycle does not alternate");
    m_edges += in_m ? 1 : 0;
  }
  if (m_edges != len / 2)
    throw std::invalid_argument("cycle must carry exactly half its edges in the matching");

  // Canonical rotation: minimal vertex first, matching edge leaving it.
  const std::size_t pos = static_cast<std::size_t>(
      std::min_element(ring.begin(), ring.end()) - ring.begin());
  std::vector<Vertex> canon(len);
  const Vertex next = ring[(pos + 1) % len];
  const bool forward = m.contains_edge(ring[pos], next);
  for (std::size_t i = 0; i < len; ++i) {
    canon[i] = forward ? ring[(pos + i) % len] : ring[(pos + len - i) % len];
  }
  return MCycle(std::move(canon));
}

bool MCycle::contains(Vertex v) const {
  return std::find(verts_.begin(), verts_.end(), v) != verts_.end();
}

}  // namespace difactor
