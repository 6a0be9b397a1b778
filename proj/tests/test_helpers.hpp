/* Copyright 2026 The SpinSearch Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SPINSEARCH_TEST_HELPERS_HPP
#define SPINSEARCH_TEST_HELPERS_HPP

#include <vector>

#include "spinsearch/transitions.hpp"

namespace spinsearch::testing {

struct EdgeSpec {
  int lower;  // higher-M level
  int upper;
  double intensity = 1.0;
  bool observed = true;
};

/// Hand-built table over levels with the given M values. Frequencies are
/// synthesized from the level energies (index-scaled placeholders), ids
/// follow the usual decreasing-frequency order.
inline TransitionTable make_table(const std::vector<double>& level_mz,
                                  const std::vector<EdgeSpec>& edges) {
  TransitionTable table;
  table.dim = static_cast<int>(level_mz.size());
  table.level_mz = level_mz;
  table.level_energy.resize(level_mz.size());
  for (std::size_t s = 0; s < level_mz.size(); ++s) {
    // spread energies so every line frequency is distinct
    table.level_energy[s] = 1000.0 * level_mz[s] - 7.0 * static_cast<double>(s);
  }
  for (const auto& e : edges) {
    Transition t;
    t.lower_state = e.lower;
    t.upper_state = e.upper;
    t.frequency_hz = table.level_energy[static_cast<std::size_t>(e.lower)] -
                     table.level_energy[static_cast<std::size_t>(e.upper)];
    t.intensity = e.intensity;
    t.observed = e.observed;
    table.transitions.push_back(t);
  }
  std::sort(table.transitions.begin(), table.transitions.end(),
            [](const Transition& a, const Transition& b) {
              if (a.frequency_hz != b.frequency_hz) return a.frequency_hz > b.frequency_hz;
              if (a.lower_state != b.lower_state) return a.lower_state < b.lower_state;
              return a.upper_state < b.upper_state;
            });
  for (std::size_t i = 0; i < table.transitions.size(); ++i) {
    table.transitions[i].id = static_cast<int>(i);
  }
  table.rebuild_adjacency();
  return table;
}

/// Canonical M layout of a 16-level four-spin register: blocks 1, 4, 6, 4, 1.
inline std::vector<double> four_spin_mz() {
  std::vector<double> mz;
  mz.push_back(2.0);
  for (int i = 0; i < 4; ++i) mz.push_back(1.0);
  for (int i = 0; i < 6; ++i) mz.push_back(0.0);
  for (int i = 0; i < 4; ++i) mz.push_back(-1.0);
  mz.push_back(-2.0);
  return mz;
}

}  // namespace spinsearch::testing

#endif  // SPINSEARCH_TEST_HELPERS_HPP
