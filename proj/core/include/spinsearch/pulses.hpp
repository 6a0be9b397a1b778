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

#ifndef SPINSEARCH_PULSES_HPP
#define SPINSEARCH_PULSES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "spinsearch/labeling.hpp"
#include "spinsearch/population.hpp"
#include "spinsearch/transitions.hpp"

namespace spinsearch {

/// An ordered cascade of transition-selective pi pulses. Each pulse is an
/// ideal population transposition of its transition's two levels; the whole
/// plan therefore acts as a permutation of populations.
struct PulsePlan {
  std::vector<int> pulses;  ///< transition ids, applied front to back

  int size() const { return static_cast<int>(pulses.size()); }
};

/// Selective pi pulse: swaps the two level populations of one observed
/// transition. Throws UnknownTransition / UnobservedTransition.
PopulationState apply_pi(const PopulationState& state, int transition_id,
                         const TransitionTable& table);

PopulationState apply_plan(const PopulationState& state, const PulsePlan& plan,
                           const TransitionTable& table);

/// Pulse cascade whose net effect is exactly the transposition of the
/// populations of `level_a` and `level_b`: a palindrome
/// t1 .. t_{m-1} t_m t_{m-1} .. t1 along a shortest path of observed
/// transitions (a single pulse when the levels are directly connected).
/// Ties between equal-length paths are broken by transition id order.
///
/// Throws Unreachable when the levels lie in different components.
PulsePlan compile_swap(int level_a, int level_b, const TransitionTable& table);

/// One searchable initial state, built by inverting pairs of levels out of
/// equilibrium and subtracting.
struct Preparation {
  PopulationState rho_k;     ///< plan applied to equilibrium
  PopulationState rho_in;    ///< equilibrium minus rho_k
  PulsePlan plan;
  /// Swapped level pairs as work-label pairs (ancilla bit 0 side).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pops_pairs;
};

/// Prepares the k-th initial state (k is 1-based over the work qubits).
///
/// For n_work >= 2 the support is the 2^(n-1) levels labeled with ancilla 0
/// and work bit k = 0; supports are paired along single work-bit flips, and
/// the first pairing (in bit order) whose pairs all have distinct equilibrium
/// M and a connecting pulse path is taken, so every pair carries a nonzero
/// +/-p population pair. For n_work = 1 no second work bit exists and the two
/// ancilla-0 levels themselves form the single inverted pair.
///
/// Throws Unpreparable when no pairing has all pairs reachable.
Preparation prepare_initial(int k, const Labeling& labeling, const TransitionTable& table,
                            const PopulationState& equilibrium);

}  // namespace spinsearch

#endif  // SPINSEARCH_PULSES_HPP
