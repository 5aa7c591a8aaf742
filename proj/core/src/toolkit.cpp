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

#include "difactor/toolkit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace difactor {

namespace {

std::vector<std::uint8_t> make_mask(std::uint32_t order,
                                    const std::vector<Vertex>& verts) {
  std::vector<std::uint8_t> mask(order, 0);
  for (Vertex v : verts) {
    if (v >= order) throw std::invalid_argument("vertex out of range");
    mask[v] = 1;
  }
  return mask;
}

bool disjoint(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  for (Vertex u : a)
    for (Vertex v : b)
      if (u == v) return false;
  return true;
}

// Ring rotated/flipped so that edge (r[0], r[1]) is a matching edge; both
// traversal senses of a cycle have exactly one such alignment.
std::vector<Vertex> aligned_ring(const Matching& m,
                                 const std::vector<Vertex>& ring,
                                 bool reversed) {
  const std::size_t len = ring.size();
  std::vector<Vertex> r(len);
  if (!reversed) {
    r = ring;  // canonical rings already lead with a matching edge
  } else {
    for (std::size_t i = 0; i < len; ++i) r[i] = ring[(len - i) % len];
    if (!m.contains_edge(r[0], r[1])) {
      std::rotate(r.begin(), r.begin() + 1, r.end());
    }
  }
  if (!m.contains_edge(r[0], r[1]))
    throw std::logic_error("ring alignment failed");
  return r;
}

}  // namespace

std::optional<MCycle> find_cycle_through_path(const BipartiteGraph& g,
                                              const Matching& m,
                                              const MCycle& c, const MPath& p,
                                              std::size_t borrow) {
  const std::size_t half = c.length() / 2;
  if (borrow < 1 || borrow > half)
    throw std::invalid_argument("borrow must lie in 1..|C|/2");
  if (!disjoint(c.vertices(), p.vertices()))
    throw std::invalid_argument("cycle and path must be disjoint");

  const Vertex x = p.front(), y = p.back();
  for (bool reversed : {false, true}) {
    const auto r = aligned_ring(m, c.vertices(), reversed);
    for (std::size_t j = 0; j < half; ++j) {
      const std::size_t jj = (j + borrow - 1) % half;
      if (!g.has_edge(x, r[2 * j]) || !g.has_edge(y, r[2 * jj + 1])) continue;
      std::vector<Vertex> ring = p.vertices();
      ring.reserve(p.order() + 2 * borrow);
      for (std::size_t t = 0; t < 2 * borrow; ++t) {
        ring.push_back(r[(2 * jj + 1 + r.size() - t) % r.size()]);
      }
      return MCycle::of(g, m, std::move(ring));
    }
  }
  return std::nullopt;
}

std::optional<MCycle> find_six_cycle(const BipartiteGraph& g,
                                     const Matching& m) {
  if (!g.balanced() || !m.perfect())
    throw std::invalid_argument("six-cycle search needs a perfect matching");
  const std::uint32_t n = g.x_count();

  std::vector<Vertex> ys(n);
  std::iota(ys.begin(), ys.end(), 0);
  std::stable_sort(ys.begin(), ys.end(), [&](Vertex a, Vertex b) {
    return g.degree(g.y_vertex(a)) > g.degree(g.y_vertex(b));
  });

  for (Vertex yi : ys) {
    const Vertex y = g.y_vertex(yi);
    const Vertex x = m.partner(y);
    for (Vertex yp : g.neighbors(x)) {
      if (yp == y) continue;
      const Vertex xp = m.partner(yp);
      for (Vertex ypp : g.neighbors(xp)) {
        if (ypp == y || ypp == yp) continue;
        const Vertex xpp = m.partner(ypp);
        if (!g.has_edge(xpp, y)) continue;
        return MCycle::of(g, m, {x, yp, xp, ypp, xpp, y});
      }
    }
  }
  return std::nullopt;
}

void for_each_short_m_cycle(const BipartiteGraph& g, const Matching& m,
                            const std::vector<Vertex>& h_vertices,
                            std::initializer_list<std::size_t> lengths,
                            const std::function<bool(const MCycle&)>& visit) {
  auto mask = make_mask(g.order(), h_vertices);
  for (Vertex v : h_vertices) {
    if (!m.covers(v) || !mask[m.partner(v)])
      throw std::invalid_argument("vertex set not closed under matching partners");
  }

  // Matching edges inside H, in X order; a 2l-cycle is a cyclic sequence of
  // l of them whose consecutive connectors (y_i, x_{i+1}) are host edges.
  std::vector<std::pair<Vertex, Vertex>> me;  // (x global, y global)
  for (Vertex v : h_vertices)
    if (g.is_x(v)) me.emplace_back(v, m.partner(v));
  std::sort(me.begin(), me.end());

  std::vector<std::size_t> want;
  for (std::size_t l : lengths) {
    if (l != 4 && l != 6 && l != 8)
      throw std::invalid_argument("supported cycle lengths are 4, 6, 8");
    want.push_back(l / 2);
  }
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());

  const std::size_t count = me.size();
  std::vector<std::size_t> pick;
  std::vector<std::uint8_t> used(count, 0);
  bool stop = false;

  // DFS over edge tuples anchored at their minimal member.
  auto extend = [&](auto&& self, std::size_t target) -> void {
    if (stop) return;
    if (pick.size() == target) {
      if (!g.has_edge(me[pick.back()].second, me[pick.front()].first)) return;
      std::vector<Vertex> ring;
      ring.reserve(2 * target);
      for (std::size_t id : pick) {
        ring.push_back(me[id].first);
        ring.push_back(me[id].second);
      }
      if (!visit(MCycle::of(g, m, std::move(ring)))) stop = true;
      return;
    }
    for (std::size_t id = pick.front() + 1; id < count && !stop; ++id) {
      if (used[id]) continue;
      if (!g.has_edge(me[pick.back()].second, me[id].first)) continue;
      used[id] = 1;
      pick.push_back(id);
      self(self, target);
      pick.pop_back();
      used[id] = 0;
    }
  };

  for (std::size_t target : want) {
    if (target > count) continue;
    for (std::size_t first = 0; first + target <= count && !stop; ++first) {
      pick.assign(1, first);
      used[first] = 1;
      extend(extend, target);
      used[first] = 0;
    }
    if (stop) return;
  }
}

std::vector<MCycle> enumerate_short_m_cycles(
    const BipartiteGraph& g, const Matching& m,
    const std::vector<Vertex>& h_vertices,
    std::initializer_list<std::size_t> lengths) {
  std::vector<MCycle> out;
  for_each_short_m_cycle(g, m, h_vertices, lengths, [&](const MCycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

namespace {

std::optional<InsertionEdge> scan_insertion(const BipartiteGraph& g,
                                            const Matching& m,
                                            const std::vector<Vertex>& verts,
                                            bool cyclic, const MPath& q) {
  if (!disjoint(verts, q.vertices()))
    throw std::invalid_argument("host and path must be disjoint");
  const Vertex front = q.front(), back = q.back();
  const std::size_t edge_count = cyclic ? verts.size() : verts.size() - 1;
  for (std::size_t i = 0; i < edge_count; ++i) {
    const Vertex u = verts[i], v = verts[(i + 1) % verts.size()];
    if (m.contains_edge(u, v)) continue;
    if (g.has_edge(u, front) && g.has_edge(v, back))
      return InsertionEdge{u, v, u, v};
    if (g.has_edge(v, front) && g.has_edge(u, back))
      return InsertionEdge{u, v, v, u};
  }
  return std::nullopt;
}

// Splice body shared by the cycle and path variants: returns the host
// sequence with q riveted between host_u and host_v.
std::vector<Vertex> spliced_sequence(const BipartiteGraph& g,
                                     const Matching& m,
                                     const std::vector<Vertex>& host,
                                     bool cyclic, const MPath& q,
                                     const InsertionEdge& w) {
  const bool mates_ok =
      (w.front_mate == w.host_u && w.back_mate == w.host_v) ||
      (w.front_mate == w.host_v && w.back_mate == w.host_u);
  if (!mates_ok) throw std::invalid_argument("witness mates must name the host edge ends");
  if (m.contains_edge(w.host_u, w.host_v))
    throw std::invalid_argument("insertion edge must not lie in the matching");
  if (!g.has_edge(w.front_mate, q.front()) ||
      !g.has_edge(w.back_mate, q.back()))
    throw std::invalid_argument("witness cross edge missing");

  const std::size_t len = host.size();
  const std::size_t edge_count = cyclic ? len : len - 1;
  std::size_t at = len;
  for (std::size_t i = 0; i < edge_count; ++i) {
    const Vertex a = host[i], b = host[(i + 1) % len];
    if ((a == w.host_u && b == w.host_v) || (a == w.host_v && b == w.host_u)) {
      at = i;
      break;
    }
  }
  if (at == len) throw std::invalid_argument("witness edge not on the host");

  const Vertex a = host[at];  // attaches to whichever q end mates with it
  std::vector<Vertex> out;
  out.reserve(len + q.order());
  if (cyclic) {
    // b .. around .. a, then q bridges a back to b.
    for (std::size_t i = 1; i <= len; ++i) out.push_back(host[(at + i) % len]);
  } else {
    out.assign(host.begin(), host.begin() + at + 1);
  }
  const auto& qv = q.vertices();
  if (w.front_mate == a) {
    out.insert(out.end(), qv.begin(), qv.end());
  } else {
    out.insert(out.end(), qv.rbegin(), qv.rend());
  }
  if (!cyclic) out.insert(out.end(), host.begin() + at + 1, host.end());
  return out;
}

}  // namespace

std::optional<InsertionEdge> find_insertion_edge(const BipartiteGraph& g,
                                                 const Matching& m,
                                                 const MCycle& host,
                                                 const MPath& q) {
  return scan_insertion(g, m, host.vertices(), true, q);
}

std::optional<InsertionEdge> find_insertion_edge(const BipartiteGraph& g,
                                                 const Matching& m,
                                                 const MPath& host,
                                                 const MPath& q) {
  return scan_insertion(g, m, host.vertices(), false, q);
}

MCycle insert_path(const BipartiteGraph& g, const Matching& m,
                   const MCycle& host, const MPath& q,
                   const InsertionEdge& w) {
  // Re-orienting the splice so the cycle closes: sequence starts just past
  // the deleted edge and q reconnects its far end.
  auto seq = spliced_sequence(g, m, host.vertices(), true, q, w);
  return MCycle::of(g, m, std::move(seq));
}

MPath insert_path_into_path(const BipartiteGraph& g, const Matching& m,
                            const MPath& host, const MPath& q,
                            const InsertionEdge& w) {
  auto seq = spliced_sequence(g, m, host.vertices(), false, q, w);
  return MPath::of(g, m, std::move(seq));
}

std::optional<MergeWitness> find_merge_witness(const BipartiteGraph& g,
                                               const Matching& m,
                                               const MCycle& c1,
                                               const MCycle& c2) {
  if (!disjoint(c1.vertices(), c2.vertices()))
    throw std::invalid_argument("cycles must be disjoint");
  const auto& r1 = c1.vertices();
  const auto& r2 = c2.vertices();
  for (std::size_t i = 0; i < r1.size(); ++i) {
    const Vertex a1 = r1[i], b1 = r1[(i + 1) % r1.size()];
    if (m.contains_edge(a1, b1)) continue;
    for (std::size_t j = 0; j < r2.size(); ++j) {
      const Vertex a2 = r2[j], b2 = r2[(j + 1) % r2.size()];
      if (m.contains_edge(a2, b2)) continue;
      if (g.has_edge(a1, b2) && g.has_edge(b1, a2))
        return MergeWitness{{a1, b1}, {a2, b2}, {a1, b2}, {b1, a2}};
      if (g.has_edge(a1, a2) && g.has_edge(b1, b2))
        return MergeWitness{{a1, b1}, {a2, b2}, {a1, a2}, {b1, b2}};
    }
  }
  return std::nullopt;
}

std::optional<MCycle> merge_two_cycles(const BipartiteGraph& g,
                                       const Matching& m, const MCycle& c1,
                                       const MCycle& c2) {
  const auto w = find_merge_witness(g, m, c1, c2);
  if (!w) return std::nullopt;

  auto path_after_cut = [](const std::vector<Vertex>& ring,
                           std::pair<Vertex, Vertex> cut) {
    std::size_t at = ring.size();
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (ring[i] == cut.first && ring[(i + 1) % ring.size()] == cut.second) {
        at = i;
        break;
      }
    }
    std::vector<Vertex> path;  // cut.second .. cut.first
    for (std::size_t i = 1; i <= ring.size(); ++i)
      path.push_back(ring[(at + i) % ring.size()]);
    return path;
  };

  auto p1 = path_after_cut(c1.vertices(), w->c1_edge);  // b1 .. a1
  auto p2 = path_after_cut(c2.vertices(), w->c2_edge);  // b2 .. a2
  std::vector<Vertex> ring = std::move(p1);
  if (w->cross_a.second == w->c2_edge.second) {
    // a1-b2 and b1-a2: append p2 as b2 .. a2
    ring.insert(ring.end(), p2.begin(), p2.end());
  } else {
    // a1-a2 and b1-b2: append p2 reversed
    ring.insert(ring.end(), p2.rbegin(), p2.rend());
  }
  return MCycle::of(g, m, std::move(ring));
}

MPath grow_maximal_m_path(const BipartiteGraph& g, const Matching& m,
                          const std::vector<Vertex>& h_vertices,
                          const MPath& seed) {
  auto in_h = make_mask(g.order(), h_vertices);
  for (Vertex v : seed.vertices())
    if (!in_h[v]) throw std::invalid_argument("seed leaves the vertex set");

  std::vector<Vertex> verts = seed.vertices();
  std::vector<std::uint8_t> in_p(g.order(), 0);
  for (Vertex v : verts) in_p[v] = 1;

  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex w : g.neighbors(verts.front())) {
      if (!in_h[w] || in_p[w] || !m.covers(w)) continue;
      const Vertex wp = m.partner(w);
      if (!in_h[wp] || in_p[wp]) continue;
      verts.insert(verts.begin(), {wp, w});
      in_p[w] = in_p[wp] = 1;
      grew = true;
      break;
    }
    for (Vertex w : g.neighbors(verts.back())) {
      if (!in_h[w] || in_p[w] || !m.covers(w)) continue;
      const Vertex wp = m.partner(w);
      if (!in_h[wp] || in_p[wp]) continue;
      verts.push_back(w);
      verts.push_back(wp);
      in_p[w] = in_p[wp] = 1;
      grew = true;
      break;
    }
  }
  return MPath::of(g, m, std::move(verts));
}

}  // namespace difactor
