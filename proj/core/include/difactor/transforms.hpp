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

#ifndef DIFACTOR_TRANSFORMS_HPP
#define DIFACTOR_TRANSFORMS_HPP

#include <tuple>

#include "difactor/alternating.hpp"
#include "difactor/bipartite.hpp"
#include "difactor/digraph.hpp"
#include "difactor/undirected.hpp"

namespace difactor {

/// Records how digraph vertices map onto split-vertex pairs. Digraph vertex
/// v corresponds to the matching edge (x = v, y = y_of[v]); the split
/// construction makes this the identity table.
struct CorrespondenceTag {
  enum class Direction { symmetrize, split, contract };
  Direction direction;
  std::vector<Vertex> y_of;  // digraph vertex -> Y side index of its edge

  CorrespondenceTag inverted() const {
    CorrespondenceTag t = *this;
    t.direction = direction == Direction::split ? Direction::contract
                                                : Direction::split;
    return t;
  }
};

/// Replaces every undirected edge uv with the two arcs (u,v) and (v,u).
Digraph symmetrize(const UndirectedGraph& g);

/// Splits every vertex v into (v_X, v_Y), joins v_X v_Y as the planted
/// perfect matching, and turns each arc (u,v) into the edge u_X v_Y.
/// Degrees satisfy d+(v) = d(v_X) - 1, d-(v) = d(v_Y) - 1.
std::tuple<BipartiteGraph, Matching, CorrespondenceTag> digraph_to_bipartite(
    const Digraph& d);

/// Contracts a perfect matching: the exact inverse of the split, up to
/// relabeling. Digraph vertex ids are the X indices of the matching edges.
std::pair<Digraph, CorrespondenceTag> bipartite_to_digraph(
    const BipartiteGraph& g, const Matching& m);

/// Maps each alternating 2l-cycle of f to a directed l-cycle. Rejects f if
/// it fails verification in the bipartite host (cycle count inferred).
DirectedTwoFactor translate_m2factor(const BipartiteGraph& g,
                                     const Matching& m, const MTwoFactor& f,
                                     const CorrespondenceTag& tag);

}  // namespace difactor

#endif  // DIFACTOR_TRANSFORMS_HPP
