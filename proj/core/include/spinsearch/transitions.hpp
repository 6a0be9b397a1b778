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

#ifndef SPINSEARCH_TRANSITIONS_HPP
#define SPINSEARCH_TRANSITIONS_HPP

#include <utility>
#include <vector>

#include "spinsearch/eigensystem.hpp"
#include "spinsearch/spin_system.hpp"

namespace spinsearch {

/// One single-quantum line.
///
/// `lower_state` is the level with total M one higher than `upper_state`
/// (lower and upper refer to positions in the usual energy-level diagram,
/// where the more-aligned level sits below). The reported line frequency is
///   frequency_hz = E(lower_state) - E(upper_state),
/// which for positive shifts comes out positive, and the line intensity is
/// the squared F+ matrix element between the two eigenstates.
struct Transition {
  int id = -1;           ///< ids ordered by decreasing frequency
  int lower_state = -1;  ///< higher-M eigenstate
  int upper_state = -1;  ///< lower-M eigenstate
  double frequency_hz = 0.0;
  double intensity = 0.0;
  bool observed = false;
};

/// All Delta-M = 1 lines of an eigensystem plus the connectivity relation
/// among the observed ones (two transitions are connected iff they share an
/// eigenstate). Carries per-level M and energy so it is self-contained.
struct TransitionTable {
  int dim = 0;
  std::vector<double> level_mz;
  std::vector<double> level_energy;
  std::vector<Transition> transitions;      ///< indexed by id
  std::vector<std::vector<int>> adjacency;  ///< observed id -> connected observed ids

  const Transition& at(int id) const;
  /// Transition between an unordered level pair, or nullptr.
  const Transition* between(int level_a, int level_b) const;
  /// Number of observed transitions touching a level.
  int observed_degree(int level) const;
  std::vector<int> observed_ids() const;
  /// level -> (neighbor level, transition id), observed lines only,
  /// sorted by transition id.
  std::vector<std::vector<std::pair<int, int>>> level_adjacency() const;
  /// Rebuild `adjacency` from the transitions (used after doctoring a table).
  void rebuild_adjacency();
};

/// Enumerates every Delta-M = 1 pair, computes frequencies and intensities,
/// applies the observability threshold and builds the connectivity graph.
TransitionTable compute_transitions(const EigenSystem& eig, const SpinSystem& system);

}  // namespace spinsearch

#endif  // SPINSEARCH_TRANSITIONS_HPP
