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

#ifndef DIFACTOR_TOOLKIT_HPP
#define DIFACTOR_TOOLKIT_HPP

#include <functional>
#include <initializer_list>
#include <optional>
#include <vector>

#include "difactor/alternating.hpp"
#include "difactor/bipartite.hpp"

namespace difactor {

/// A non-matching host edge whose ends connect crosswise to the ends of a
/// path about to be spliced in: host_u--front_mate's path end, and so on.
struct InsertionEdge {
  Vertex host_u, host_v;   // consecutive on the host, edge not in M
  Vertex front_mate;       // one of {host_u, host_v}, adjacent to path front
  Vertex back_mate;        // the other one, adjacent to path back
};

/// Two non-matching edges, one per cycle, whose deletion plus the two cross
/// edges fuses the cycles into a single alternating cycle on the union.
struct MergeWitness {
  std::pair<Vertex, Vertex> c1_edge, c2_edge;  // traversal order in each ring
  std::pair<Vertex, Vertex> cross_a, cross_b;
};

/// Searches for an alternating cycle of length |p| + 2*borrow through all of
/// p and a run of `borrow` matching edges of c. Requires disjoint c, p and
/// 1 <= borrow <= |c|/2. Guaranteed to succeed whenever the ends of p send
/// more than |c|/2 edges into c; otherwise may return nothing.
std::optional<MCycle> find_cycle_through_path(const BipartiteGraph& g,
                                              const Matching& m,
                                              const MCycle& c, const MPath& p,
                                              std::size_t borrow);

/// Finds an alternating 6-cycle, scanning partner triples from high-degree
/// Y vertices first. Complete: returns nothing only when none exists. A
/// hit is guaranteed when every X degree is at least (n+3)/2.
std::optional<MCycle> find_six_cycle(const BipartiteGraph& g,
                                     const Matching& m);

/// Visits every alternating cycle inside g[h_vertices] whose length lies in
/// `lengths` (subset of {4,6,8}), in canonical form without duplicates.
/// h_vertices must be closed under matching partners. Return false from the
/// visitor to stop early.
void for_each_short_m_cycle(const BipartiteGraph& g, const Matching& m,
                            const std::vector<Vertex>& h_vertices,
                            std::initializer_list<std::size_t> lengths,
                            const std::function<bool(const MCycle&)>& visit);

std::vector<MCycle> enumerate_short_m_cycles(
    const BipartiteGraph& g, const Matching& m,
    const std::vector<Vertex>& h_vertices,
    std::initializer_list<std::size_t> lengths);

/// Scans the host's non-matching edges for an insertion edge of q. Always a
/// plain scan; the degree thresholds (|host|/2 + 1 into a cycle, |host|/2 +
/// 2 into a path) only guarantee a hit exists.
std::optional<InsertionEdge> find_insertion_edge(const BipartiteGraph& g,
                                                 const Matching& m,
                                                 const MCycle& host,
                                                 const MPath& q);
std::optional<InsertionEdge> find_insertion_edge(const BipartiteGraph& g,
                                                 const Matching& m,
                                                 const MPath& host,
                                                 const MPath& q);

/// Splices q into the host cycle at w: length |host| + |q|.
MCycle insert_path(const BipartiteGraph& g, const Matching& m,
                   const MCycle& host, const MPath& q, const InsertionEdge& w);

/// Same splice in a host path; the ends of the host are preserved.
MPath insert_path_into_path(const BipartiteGraph& g, const Matching& m,
                            const MPath& host, const MPath& q,
                            const InsertionEdge& w);

std::optional<MergeWitness> find_merge_witness(const BipartiteGraph& g,
                                               const Matching& m,
                                               const MCycle& c1,
                                               const MCycle& c2);

/// Fuses two disjoint alternating cycles into one on the union, if some
/// pair of non-matching edges admits the needed cross edges.
std::optional<MCycle> merge_two_cycles(const BipartiteGraph& g,
                                       const Matching& m, const MCycle& c1,
                                       const MCycle& c2);

/// Extends seed two vertices at a time (non-matching edge, then matching
/// edge) at either end until neither end can grow inside g[h_vertices].
MPath grow_maximal_m_path(const BipartiteGraph& g, const Matching& m,
                          const std::vector<Vertex>& h_vertices,
                          const MPath& seed);

}  // namespace difactor

#endif  // DIFACTOR_TOOLKIT_HPP
