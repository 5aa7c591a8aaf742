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

#include "difactor/verify.hpp"

#include <stdexcept>

namespace difactor {

namespace {

std::string cycle_tag(std::size_t i) { return "cycle " + std::to_string(i); }

}  // namespace

VerificationReport verify_directed_2factor(const Digraph& d,
                                           const DirectedTwoFactor& f,
                                           std::uint32_t k,
                                           std::uint32_t min_len) {
  VerificationReport rep;
  if (f.cycles.size() != k)
    rep.fail("cycle-count", "expected " + std::to_string(k) + " cycles, got " +
                                std::to_string(f.cycles.size()));

  std::vector<std::uint8_t> seen(d.order(), 0);
  for (std::size_t i = 0; i < f.cycles.size(); ++i) {
    const auto& c = f.cycles[i];
    if (c.size() < min_len)
      rep.fail("min-length", cycle_tag(i) + " has length " +
                                 std::to_string(c.size()) + " < " +
                                 std::to_string(min_len));
    for (Vertex v : c) {
      if (v >= d.order()) {
        rep.fail("coverage", cycle_tag(i) + " names vertex " +
                                 std::to_string(v) + " out of range");
        continue;
      }
      if (seen[v])
        rep.fail("disjointness", "vertex " + std::to_string(v) + " reused");
      seen[v] = 1;
    }
    for (std::size_t j = 0; j < c.size(); ++j) {
      const Vertex u = c[j], v = c[(j + 1) % c.size()];
      if (u >= d.order() || v >= d.order()) continue;
      if (!d.has_arc(u, v))
        rep.fail("arc-missing", cycle_tag(i) + " uses missing arc (" +
                                    std::to_string(u) + "," +
                                    std::to_string(v) + ")");
    }
  }
  for (Vertex v = 0; v < d.order(); ++v)
    if (!seen[v])
      rep.fail("coverage", "vertex " + std::to_string(v) + " uncovered");
  return rep;
}

VerificationReport verify_m_2factor(const BipartiteGraph& g, const Matching& m,
                                    const MTwoFactor& f, std::uint32_t k,
                                    std::uint32_t min_len) {
  if (!m.perfect())
    throw std::invalid_argument("verify_m_2factor requires a perfect matching");

  VerificationReport rep;
  if (f.cycles.size() != k)
    rep.fail("cycle-count", "expected " + std::to_string(k) + " cycles, got " +
                                std::to_string(f.cycles.size()));

  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<std::uint8_t> m_edge_used(g.order(), 0);  // indexed by X end
  for (std::size_t i = 0; i < f.cycles.size(); ++i) {
    const auto& c = f.cycles[i];
    if (c.size() < min_len)
      rep.fail("min-length", cycle_tag(i) + " has length " +
                                 std::to_string(c.size()) + " < " +
                                 std::to_string(min_len));
    bool indices_ok = true;
    for (Vertex v : c) {
      if (v >= g.order()) {
        rep.fail("coverage", cycle_tag(i) + " names vertex " +
                                 std::to_string(v) + " out of range");
        indices_ok = false;
        continue;
      }
      if (seen[v])
        rep.fail("disjointness", "vertex " + std::to_string(v) + " reused");
      seen[v] = 1;
    }
    if (!indices_ok || c.size() < 2) continue;

    std::size_t m_count = 0;
    bool alternates = c.size() % 2 == 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      const Vertex a = c[j], b = c[(j + 1) % c.size()];
      if (!g.has_edge(a, b)) {
        rep.fail("edge-missing", cycle_tag(i) + " uses missing edge (" +
                                     std::to_string(a) + "," +
                                     std::to_string(b) + ")");
        alternates = false;
        continue;
      }
      const bool in_m = m.contains_edge(a, b);
      if (in_m) {
        ++m_count;
        m_edge_used[g.is_x(a) ? a : b] = 1;
      }
      if (j > 0 && in_m == m.contains_edge(c[j - 1], a)) alternates = false;
    }
    if (!alternates || m_count != c.size() / 2)
      rep.fail("alternation", cycle_tag(i) + " is not an alternating cycle");
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (!seen[v])
      rep.fail("coverage", "vertex " + std::to_string(v) + " uncovered");
  for (auto [x, y] : m.edges())
    if (!m_edge_used[g.x_vertex(x)])
      rep.fail("matching-coverage", "matching edge (" + std::to_string(x) +
                                        "," + std::to_string(y) +
                                        ") on no cycle");
  return rep;
}

}  // namespace difactor
