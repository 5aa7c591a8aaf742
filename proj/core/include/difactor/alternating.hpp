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

#ifndef DIFACTOR_ALTERNATING_HPP
#define DIFACTOR_ALTERNATING_HPP

#include <vector>

#include "difactor/bipartite.hpp"

namespace difactor {

/// Alternating path that starts and ends with matching edges. Even order,
/// exactly |vertices|/2 matching edges, ends in different partite sets.
class MPath {
 public:
  /// Validates the sequence against the host; throws on any breach.
  static MPath of(const BipartiteGraph& g, const Matching& m,
                  std::vector<Vertex> verts);

  std::size_t order() const { return verts_.size(); }
  const std::vector<Vertex>& vertices() const { return verts_; }
  Vertex front() const { return verts_.front(); }
  Vertex back() const { return verts_.back(); }

  bool operator==(const MPath& other) const { return verts_ == other.verts_; }

 private:
  explicit MPath(std::vector<Vertex> v) : verts_(std::move(v)) {}
  std::vector<Vertex> verts_;
};

/// Alternating cycle: even length >= 4, half its edges in the matching.
/// Stored rotation-canonically: minimal vertex first, with the matching
/// edge leaving it forward, so cycle sets compare deterministically.
class MCycle {
 public:
  static MCycle of(const BipartiteGraph& g, const Matching& m,
                   std::vector<Vertex> ring);

  std::size_t length() const { return verts_.size(); }
  const std::vector<Vertex>& vertices() const { return verts_; }
  bool contains(Vertex v) const;

  bool operator==(const MCycle& other) const { return verts_ == other.verts_; }
  bool operator<(const MCycle& other) const { return verts_ < other.verts_; }

 private:
  explicit MCycle(std::vector<Vertex> v) : verts_(std::move(v)) {}
  std::vector<Vertex> verts_;
};

/// Candidate alternating 2-factor. Raw rings, unvalidated by design:
/// verify_m_2factor reports on arbitrary content.
struct MTwoFactor {
  std::vector<std::vector<Vertex>> cycles;

  static MTwoFactor from_cycles(const std::vector<MCycle>& cs) {
    MTwoFactor f;
    f.cycles.reserve(cs.size());
    for (const auto& c : cs) f.cycles.push_back(c.vertices());
    return f;
  }
};

}  // namespace difactor

#endif  // DIFACTOR_ALTERNATING_HPP
