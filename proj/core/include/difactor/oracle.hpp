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

#ifndef DIFACTOR_ORACLE_HPP
#define DIFACTOR_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "difactor/alternating.hpp"
#include "difactor/digraph.hpp"

namespace difactor {

/// Hard limits for the exhaustive searches. Exceeding any of them aborts
/// the run with a budget status instead of an answer.
struct OracleBudget {
  std::uint32_t max_vertices = 16;
  std::uint64_t max_nodes_expanded = 10'000'000;
  double time_limit_seconds = 30.0;
};

enum class OracleStatus { feasible, infeasible, budget_exceeded };

struct DirectedOracleResult {
  OracleStatus status;
  std::optional<DirectedTwoFactor> witness;  // set when feasible
  std::uint64_t nodes_expanded = 0;
};

struct MOracleResult {
  OracleStatus status;
  std::optional<MTwoFactor> witness;
  std::uint64_t nodes_expanded = 0;
};

struct DisjointCyclesResult {
  OracleStatus status;
  std::optional<std::vector<std::vector<Vertex>>> witness;
  std::uint64_t nodes_expanded = 0;
};

/// Exhaustive backtracking over spanning collections of exactly k
/// vertex-disjoint directed cycles of length >= min_len. infeasible only
/// after full exhaustion.
DirectedOracleResult oracle_directed_2factor(const Digraph& d, std::uint32_t k,
                                             std::uint32_t min_len,
                                             const OracleBudget& budget = {});

/// Exhaustive over partitions of the matching edges into alternating
/// cycles: exactly k cycles, each of length >= min_len, m perfect.
MOracleResult oracle_m_2factor(const BipartiteGraph& g, const Matching& m,
                               std::uint32_t k, std::uint32_t min_len,
                               const OracleBudget& budget = {});

/// Exhaustive search for k vertex-disjoint directed cycles of length >=
/// min_len (not necessarily spanning).
DisjointCyclesResult oracle_disjoint_cycles(const Digraph& d, std::uint32_t k,
                                            std::uint32_t min_len,
                                            const OracleBudget& budget = {});

enum class ExploreMode { problem1, bermond_thomassen };

struct ExploreParams {
  ExploreMode mode = ExploreMode::problem1;
  std::uint32_t n_min = 3;
  std::uint32_t n_max = 6;
  std::uint32_t k = 1;
  std::uint32_t samples = 100;
  std::uint64_t seed = 0;
  OracleBudget budget;
};

struct ExploreReport {
  std::uint32_t samples_run = 0;
  std::uint32_t feasible = 0;
  std::uint32_t violations = 0;
  std::uint32_t budget_aborts = 0;
  std::uint64_t total_arcs = 0;
  std::vector<Digraph> counterexamples;  // capped
};

/// Samples random digraphs meeting the mode's degree floor and checks that
/// the k disjoint cycles the statement promises actually exist, via
/// oracle_disjoint_cycles. Deterministic for a fixed seed.
ExploreReport explore(const ExploreParams& params);

}  // namespace difactor

#endif  // DIFACTOR_ORACLE_HPP
