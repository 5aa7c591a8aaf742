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

#include "difactor/conditions.hpp"

#include <stdexcept>

#include "difactor/transforms.hpp"

namespace difactor {

namespace {

ConditionReport finish(std::optional<std::int64_t> value,
                       std::optional<std::pair<Vertex, Vertex>> witness,
                       std::int64_t threshold) {
  ConditionReport r;
  r.value = value;
  r.witness = witness;
  r.threshold = threshold;
  r.satisfied = !value.has_value() || *value >= threshold;
  return r;
}

}  // namespace

ConditionReport sigma2(const UndirectedGraph& g) {
  std::optional<std::int64_t> best;
  std::optional<std::pair<Vertex, Vertex>> witness;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v)) continue;
      const std::int64_t s = static_cast<std::int64_t>(g.degree(u)) + g.degree(v);
      if (!best || s < *best) {
        best = s;
        witness = {u, v};
      }
    }
  }
  return finish(best, witness, g.order());
}

ConditionReport woodall_value(const Digraph& d) {
  if (d.order() < 2) throw std::invalid_argument("digraph order must be >= 2");
  std::optional<std::int64_t> best;
  std::optional<std::pair<Vertex, Vertex>> witness;
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex v = 0; v < d.order(); ++v) {
      if (u == v || d.has_arc(u, v)) continue;
      const std::int64_t s =
          static_cast<std::int64_t>(d.out_degree(u)) + d.in_degree(v);
      if (!best || s < *best) {
        best = s;
        witness = {u, v};
      }
    }
  }
  return finish(best, witness, d.order());
}

ConditionReport sigma11(const BipartiteGraph& g) {
  if (!g.balanced()) throw std::invalid_argument("sigma11 needs a balanced host");
  const std::uint32_t n = g.x_count();
  std::optional<std::int64_t> best;
  std::optional<std::pair<Vertex, Vertex>> witness;
  for (Vertex x = 0; x < n; ++x) {
    const Vertex xv = g.x_vertex(x);
    for (Vertex y = 0; y < n; ++y) {
      const Vertex yv = g.y_vertex(y);
      if (g.has_edge(xv, yv)) continue;
      const std::int64_t s =
          static_cast<std::int64_t>(g.degree(xv)) + g.degree(yv);
      if (!best || s < *best) {
        best = s;
        witness = {x, y};
      }
    }
  }
  return finish(best, witness, static_cast<std::int64_t>(n) + 2);
}

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::woodall_hamilton: return "woodall-hamilton";
    case TheoremId::woodall_k_two_factor: return "woodall-k-2factor";
    case TheoremId::short_cycle_packing: return "short-cycle-packing";
    case TheoremId::cycle_count_partition: return "cycle-count-partition";
    case TheoremId::lasvergnas_hamilton: return "lasvergnas-hamilton";
  }
  return "?";
}

namespace {

TheoremCheck gate(TheoremId id, bool order_ok, const std::string& order_msg,
                  bool degree_ok, const std::string& degree_msg) {
  TheoremCheck c{id, order_ok && degree_ok, ""};
  if (!order_ok) c.missing = order_msg;
  if (!degree_ok) c.missing += (c.missing.empty() ? "" : "; ") + degree_msg;
  return c;
}

std::vector<TheoremCheck> gates(std::int64_t n, bool woodall_ok,
                                bool sigma_ok, std::int64_t k) {
  std::vector<TheoremCheck> out;
  out.push_back(gate(TheoremId::woodall_hamilton, n >= 2, "order below 2",
                     woodall_ok, "pair degree below n"));
  out.push_back(gate(TheoremId::woodall_k_two_factor, n >= 12 * k + 3,
                     "order below 12k+3", woodall_ok, "pair degree below n"));
  out.push_back(gate(TheoremId::short_cycle_packing, n >= 12 * k - 9,
                     "order below 12k-9", sigma_ok, "sigma11 below n+2"));
  out.push_back(gate(TheoremId::cycle_count_partition, 2 * n > 6 * (k + 1),
                     "order 2n not above 6(k+1)", sigma_ok,
                     "sigma11 below n+2"));
  out.push_back(gate(TheoremId::lasvergnas_hamilton, n >= 2, "order below 2",
                     sigma_ok, "sigma11 below n+2"));
  return out;
}

}  // namespace

std::vector<TheoremCheck> applicability(const Digraph& d, std::uint32_t k) {
  const std::int64_t n = d.order();
  bool woodall_ok = false;
  bool sigma_ok = false;
  if (n >= 2) {
    woodall_ok = woodall_value(d).satisfied;
    auto [g, m, tag] = digraph_to_bipartite(d);
    sigma_ok = sigma11(g).satisfied;
  }
  return gates(n, woodall_ok, sigma_ok, k);
}

std::vector<TheoremCheck> applicability(const BipartiteGraph& g,
                                        const Matching& m, std::uint32_t k) {
  if (!g.balanced() || !m.perfect())
    throw std::invalid_argument("applicability needs balanced host and perfect matching");
  const std::int64_t n = g.x_count();
  bool sigma_ok = sigma11(g).satisfied;
  bool woodall_ok = false;
  if (n >= 2) {
    auto [d, tag] = bipartite_to_digraph(g, m);
    woodall_ok = woodall_value(d).satisfied;
  }
  return gates(n, woodall_ok, sigma_ok, k);
}

}  // namespace difactor
