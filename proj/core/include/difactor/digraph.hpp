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

#ifndef DIFACTOR_DIGRAPH_HPP
#define DIFACTOR_DIGRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace difactor {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;

/// Simple digraph on vertices 0..n-1. No loops, no parallel arcs.
/// Immutable after construction; adjacency is precomputed.
class Digraph {
 public:
  Digraph(std::uint32_t n, std::vector<Arc> arcs);

  static Digraph complete(std::uint32_t n);

  std::uint32_t order() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t arc_count() const { return arcs_.size(); }

  bool has_arc(Vertex u, Vertex v) const { return adj_[idx(u, v)] != 0; }
  const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_[v]; }
  const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[v]; }
  std::uint32_t out_degree(Vertex v) const {
    return static_cast<std::uint32_t>(out_[v].size());
  }
  std::uint32_t in_degree(Vertex v) const {
    return static_cast<std::uint32_t>(in_[v].size());
  }

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

 private:
  std::size_t idx(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }

  std::uint32_t n_;
  std::vector<Arc> arcs_;  // sorted, canonical
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

/// (out-degree, in-degree) per vertex. Column sums both equal |arcs|.
std::vector<std::pair<std::uint32_t, std::uint32_t>> degree_profile(
    const Digraph& d);

/// Candidate spanning collection of directed cycles. Deliberately
/// unvalidated: verify_directed_2factor reports on arbitrary content.
struct DirectedTwoFactor {
  std::vector<std::vector<Vertex>> cycles;
};

}  // namespace difactor

#endif  // DIFACTOR_DIGRAPH_HPP
