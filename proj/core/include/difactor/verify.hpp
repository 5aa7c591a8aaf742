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

#ifndef DIFACTOR_VERIFY_HPP
#define DIFACTOR_VERIFY_HPP

#include <string>
#include <utility>
#include <vector>

#include "difactor/alternating.hpp"
#include "difactor/digraph.hpp"

namespace difactor {

/// Outcome of a rule-by-rule check. passed <=> violations empty.
struct VerificationReport {
  bool passed = true;
  std::vector<std::pair<std::string, std::string>> violations;  // (rule, detail)

  void fail(std::string rule, std::string detail) {
    passed = false;
    violations.emplace_back(std::move(rule), std::move(detail));
  }
  bool violated(const std::string& rule) const {
    for (const auto& [r, d] : violations)
      if (r == rule) return true;
    return false;
  }
};

/// Checks that f partitions V(d), uses only arcs of d, has exactly k cycles,
/// each of length >= min_len. Accepts arbitrary garbage and reports.
VerificationReport verify_directed_2factor(const Digraph& d,
                                           const DirectedTwoFactor& f,
                                           std::uint32_t k,
                                           std::uint32_t min_len);

/// Checks that f is a spanning family of disjoint alternating cycles that
/// together carry every edge of m, with exactly k cycles of length >=
/// min_len. Requires m perfect.
VerificationReport verify_m_2factor(const BipartiteGraph& g, const Matching& m,
                                    const MTwoFactor& f, std::uint32_t k,
                                    std::uint32_t min_len);

}  // namespace difactor

#endif  // DIFACTOR_VERIFY_HPP
