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

#include "difactor/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace difactor {

Digraph::Digraph(std::uint32_t n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end());
  adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
  out_.assign(n_, {});
  in_.assign(n_, {});
  for (auto [u, v] : arcs_) {
    if (u >= n_ || v >= n_) throw std::invalid_argument("arc endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop arc");
    if (adj_[idx(u, v)]) throw std::invalid_argument("duplicate arc");
    adj_[idx(u, v)] = 1;
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  // arcs_ sorted => neighbor lists already ascending
}

Digraph Digraph::complete(std::uint32_t n) {
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) arcs.emplace_back(u, v);
  return Digraph(n, std::move(arcs));
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> degree_profile(
    const Digraph& d) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> table(d.order());
  for (Vertex v = 0; v < d.order(); ++v)
    table[v] = {d.out_degree(v), d.in_degree(v)};
  return table;
}

}  // namespace difactor
