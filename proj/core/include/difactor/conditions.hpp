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

#ifndef DIFACTOR_CONDITIONS_HPP
#define DIFACTOR_CONDITIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "difactor/bipartite.hpp"
#include "difactor/digraph.hpp"
#include "difactor/undirected.hpp"

namespace difactor {

/// Minimum degree-sum report. value is empty when no qualifying pair
/// exists (complete graph), which counts as satisfied: the minimum over an
/// empty set is unbounded, never a sentinel integer.
struct ConditionReport {
  std::optional<std::int64_t> value;  // empty = unbounded
  std::int64_t threshold = 0;
  bool satisfied = false;
  std::optional<std::pair<Vertex, Vertex>> witness;  // realizes value

  bool unbounded() const { return !value.has_value(); }
};

/// min d(u)+d(v) over distinct non-adjacent pairs; threshold n.
ConditionReport sigma2(const UndirectedGraph& g);

/// min d+(u)+d-(v) over ordered non-arc pairs, u != v; threshold n.
/// Rejects digraphs of order < 2.
ConditionReport woodall_value(const Digraph& d);

/// min d(x)+d(y) over cross non-edges of a balanced host; threshold n+2.
ConditionReport sigma11(const BipartiteGraph& g);

enum class TheoremId {
  woodall_hamilton,       // degree >= n gives a directed Hamilton cycle
  woodall_k_two_factor,   // degree >= n, n >= 12k+3: k-cycle directed 2-factor
  short_cycle_packing,    // sigma11 >= n+2, n >= 12k-9: k short cycles
  cycle_count_partition,  // sigma11 >= n+2, 2n > 6(k+1): k+1 -> k cycles
  lasvergnas_hamilton,    // sigma11 >= n+2, 2n >= 4: Hamilton through M
};

const char* theorem_name(TheoremId id);

struct TheoremCheck {
  TheoremId id;
  bool applicable;
  std::string missing;  // empty when applicable
};

/// Evaluates order bounds and degree conditions of every statement the
/// solver leans on. Reports all of them; callers gate on what they need.
std::vector<TheoremCheck> applicability(const Digraph& d, std::uint32_t k);
std::vector<TheoremCheck> applicability(const BipartiteGraph& g,
                                        const Matching& m, std::uint32_t k);

}  // namespace difactor

#endif  // DIFACTOR_CONDITIONS_HPP
