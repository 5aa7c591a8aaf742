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

#include "difactor/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "difactor/generators.hpp"
#include "difactor/rng.hpp"

namespace difactor {

namespace {

class BudgetClock {
 public:
  explicit BudgetClock(const OracleBudget& b)
      : budget_(b), start_(std::chrono::steady_clock::now()) {}

  // true when the run must abort
  bool tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes_expanded) return exhausted_ = true;
    if ((nodes_ & 0x3ff) == 0) {
      const auto elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start_)
                               .count();
      if (elapsed > budget_.time_limit_seconds) return exhausted_ = true;
    }
    return exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  OracleBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

struct DirectedSearch {
  const Digraph& d;
  std::uint32_t k, min_len;
  BudgetClock clock;
  std::vector<std::uint8_t> used;
  std::vector<std::vector<Vertex>> cycles;
  std::vector<Vertex> path;
  std::uint32_t used_count = 0;

  DirectedSearch(const Digraph& dd, std::uint32_t kk, std::uint32_t ml,
                 const OracleBudget& b)
      : d(dd), k(kk), min_len(ml), clock(b), used(dd.order(), 0) {}

  // Every cycle is opened at the least unused vertex, so each spanning
  // collection is generated exactly once.
  bool solve() {
    if (clock.tick()) return false;
    if (used_count == d.order()) return cycles.size() == k && path.empty();
    if (path.empty()) {
      if (cycles.size() == k) return false;
      Vertex s = 0;
      while (used[s]) ++s;
      // remaining vertices must still fill the outstanding cycles
      const std::uint64_t remaining = d.order() - used_count;
      const std::uint64_t needed = static_cast<std::uint64_t>(k - cycles.size()) * min_len;
      if (remaining < needed) return false;
      used[s] = 1;
      ++used_count;
      path.push_back(s);
      if (solve()) return true;
      path.pop_back();
      used[s] = 0;
      --used_count;
      return false;
    }
    const Vertex cur = path.back(), s = path.front();
    if (path.size() >= min_len && d.has_arc(cur, s)) {
      cycles.push_back(path);
      std::vector<Vertex> saved;
      saved.swap(path);
      if (solve()) return true;
      path.swap(saved);
      cycles.pop_back();
      if (clock.exhausted()) return false;
    }
    for (Vertex w : d.out_neighbors(cur)) {
      if (used[w]) continue;
      used[w] = 1;
      ++used_count;
      path.push_back(w);
      if (solve()) return true;
      path.pop_back();
      used[w] = 0;
      --used_count;
      if (clock.exhausted()) return false;
    }
    return false;
  }
};

}  // namespace

DirectedOracleResult oracle_directed_2factor(const Digraph& d, std::uint32_t k,
                                             std::uint32_t min_len,
                                             const OracleBudget& budget) {
  if (d.order() > budget.max_vertices)
    return {OracleStatus::budget_exceeded, std::nullopt, 0};
  DirectedSearch s(d, k, min_len, budget);
  const bool found = s.solve();
  if (found) {
    DirectedTwoFactor f{s.cycles};
    return {OracleStatus::feasible, std::move(f), s.clock.nodes()};
  }
  if (s.clock.exhausted())
    return {OracleStatus::budget_exceeded, std::nullopt, s.clock.nodes()};
  return {OracleStatus::infeasible, std::nullopt, s.clock.nodes()};
}

namespace {

struct MSearch {
  const BipartiteGraph& g;
  const Matching& m;
  std::uint32_t k, min_half;
  BudgetClock clock;
  std::vector<std::pair<Vertex, Vertex>> me;  // (x global, y global)
  std::vector<std::uint8_t> used;
  std::vector<std::vector<std::size_t>> cycles;  // edge ids
  std::vector<std::size_t> seq;
  std::size_t used_count = 0;

  MSearch(const BipartiteGraph& gg, const Matching& mm, std::uint32_t kk,
          std::uint32_t min_len, const OracleBudget& b)
      : g(gg), m(mm), k(kk), min_half((min_len + 1) / 2), clock(b) {
    for (Vertex x = 0; x < g.x_count(); ++x)
      me.emplace_back(g.x_vertex(x), m.partner(g.x_vertex(x)));
    used.assign(me.size(), 0);
  }

  bool connector(std::size_t from, std::size_t to) const {
    return g.has_edge(me[from].second, me[to].first);
  }

  bool solve() {
    if (clock.tick()) return false;
    if (used_count == me.size()) return cycles.size() == k && seq.empty();
    if (seq.empty()) {
      if (cycles.size() == k) return false;
      std::size_t s = 0;
      while (used[s]) ++s;
      const std::uint64_t remaining = me.size() - used_count;
      const std::uint64_t needed =
          static_cast<std::uint64_t>(k - cycles.size()) * min_half;
      if (remaining < needed) return false;
      used[s] = 1;
      ++used_count;
      seq.push_back(s);
      if (solve()) return true;
      seq.pop_back();
      used[s] = 0;
      --used_count;
      return false;
    }
    const std::size_t cur = seq.back(), s = seq.front();
    if (seq.size() >= min_half && seq.size() >= 2 && connector(cur, s)) {
      cycles.push_back(seq);
      std::vector<std::size_t> saved;
      saved.swap(seq);
      if (solve()) return true;
      seq.swap(saved);
      cycles.pop_back();
      if (clock.exhausted()) return false;
    }
    for (std::size_t id = s + 1; id < me.size(); ++id) {
      if (used[id] || !connector(cur, id)) continue;
      used[id] = 1;
      ++used_count;
      seq.push_back(id);
      if (solve()) return true;
      seq.pop_back();
      used[id] = 0;
      --used_count;
      if (clock.exhausted()) return false;
    }
    return false;
  }

  MTwoFactor factor() const {
    MTwoFactor f;
    for (const auto& c : cycles) {
      std::vector<Vertex> ring;
      for (std::size_t id : c) {
        ring.push_back(me[id].first);
        ring.push_back(me[id].second);
      }
      f.cycles.push_back(std::move(ring));
    }
    return f;
  }
};

}  // namespace

MOracleResult oracle_m_2factor(const BipartiteGraph& g, const Matching& m,
                               std::uint32_t k, std::uint32_t min_len,
                               const OracleBudget& budget) {
  if (!g.balanced() || !m.perfect())
    throw std::invalid_argument("oracle_m_2factor needs a perfect matching");
  if (g.x_count() > budget.max_vertices)
    return {OracleStatus::budget_exceeded, std::nullopt, 0};
  MSearch s(g, m, k, min_len, budget);
  const bool found = s.solve();
  if (found) return {OracleStatus::feasible, s.factor(), s.clock.nodes()};
  if (s.clock.exhausted())
    return {OracleStatus::budget_exceeded, std::nullopt, s.clock.nodes()};
  return {OracleStatus::infeasible, std::nullopt, s.clock.nodes()};
}

namespace {

struct DisjointSearch {
  const Digraph& d;
  std::uint32_t k, min_len;
  BudgetClock clock;
  std::vector<std::uint8_t> used;
  std::vector<std::vector<Vertex>> cycles;
  std::vector<Vertex> path;

  DisjointSearch(const Digraph& dd, std::uint32_t kk, std::uint32_t ml,
                 const OracleBudget& b)
      : d(dd), k(kk), min_len(ml), clock(b), used(dd.order(), 0) {}

  // Cycles are anchored at their minimal vertex, chosen in increasing
  // order across cycles; vertices below the anchor stay untouched.
  bool pick(Vertex anchor_from) {
    if (clock.tick()) return false;
    if (cycles.size() == k) return true;
    for (Vertex a = anchor_from; a < d.order(); ++a) {
      if (used[a]) continue;
      used[a] = 1;
      path.assign(1, a);
      if (extend(a)) return true;
      used[a] = 0;
      if (clock.exhausted()) return false;
    }
    return false;
  }

  bool extend(Vertex anchor) {
    if (clock.tick()) return false;
    const Vertex cur = path.back();
    if (path.size() >= min_len && d.has_arc(cur, anchor)) {
      cycles.push_back(path);
      std::vector<Vertex> saved;
      saved.swap(path);
      if (pick(anchor + 1)) return true;
      path.swap(saved);
      cycles.pop_back();
      if (clock.exhausted()) return false;
    }
    for (Vertex w : d.out_neighbors(cur)) {
      if (w <= anchor || used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      if (extend(anchor)) return true;
      path.pop_back();
      used[w] = 0;
      if (clock.exhausted()) return false;
    }
    return false;
  }
};

}  // namespace

DisjointCyclesResult oracle_disjoint_cycles(const Digraph& d, std::uint32_t k,
                                            std::uint32_t min_len,
                                            const OracleBudget& budget) {
  if (d.order() > budget.max_vertices)
    return {OracleStatus::budget_exceeded, std::nullopt, 0};
  DisjointSearch s(d, k, min_len, budget);
  const bool found = s.pick(0);
  if (found)
    return {OracleStatus::feasible, std::move(s.cycles), s.clock.nodes()};
  if (s.clock.exhausted())
    return {OracleStatus::budget_exceeded, std::nullopt, s.clock.nodes()};
  return {OracleStatus::infeasible, std::nullopt, s.clock.nodes()};
}

ExploreReport explore(const ExploreParams& params) {
  ExploreReport rep;
  const std::uint32_t floor_n =
      params.mode == ExploreMode::problem1 ? 3 * params.k : 1;
  const std::uint32_t n_min = std::max(params.n_min, floor_n);
  const std::uint32_t n_max = std::max(params.n_max, n_min);
  const std::uint32_t min_len = params.mode == ExploreMode::problem1 ? 3 : 2;

  for (std::uint32_t s = 0; s < params.samples; ++s) {
    Rng rng(derive_seed(params.seed, s));
    const std::uint32_t n =
        n_min + static_cast<std::uint32_t>(rng.bounded(n_max - n_min + 1));
    Digraph d = params.mode == ExploreMode::problem1
                    ? gen_random_min_pair_degree(n, 4 * params.k - 1, rng.next())
                    : gen_random_min_out_degree(n, 2 * params.k - 1, rng.next());
    ++rep.samples_run;
    rep.total_arcs += d.arc_count();
    const auto res = oracle_disjoint_cycles(d, params.k, min_len, params.budget);
    switch (res.status) {
      case OracleStatus::feasible:
        ++rep.feasible;
        break;
      case OracleStatus::infeasible:
        ++rep.violations;
        if (rep.counterexamples.size() < 10) rep.counterexamples.push_back(d);
        break;
      case OracleStatus::budget_exceeded:
        ++rep.budget_aborts;
        break;
    }
  }
  return rep;
}

}  // namespace difactor
