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

#ifndef SPINSEARCH_WEAK_HPP
#define SPINSEARCH_WEAK_HPP

#include <cstdint>
#include <vector>

#include "spinsearch/population.hpp"

namespace spinsearch::weak {

/// Per-spin factor of a polarization-operator product: the projector on
/// alpha (bit 0), on beta (bit 1), or the subspace identity.
enum class Factor : std::uint8_t { alpha, beta, identity };

/// Direct product of polarization operators over all spins. Diagonal with
/// entries in {0, 1}; identity factors expand into sums over both values, so
/// the support size is 2^(#identity factors). Products stay symbolic until
/// expanded.
struct PolarizationProduct {
  std::vector<Factor> factors;  ///< index 0 = ancilla spin

  int n_spins() const { return static_cast<int>(factors.size()); }

  static PolarizationProduct all_identity(int n_spins);
  /// Projector product selecting one basis state (no identity factors).
  static PolarizationProduct basis_projector(std::uint32_t z, int n_spins);
};

/// Diagonal of the product as a population vector: 1 on every basis state
/// consistent with the fixed factors, 0 elsewhere.
PopulationState expand(const PolarizationProduct& product);

/// Oracle of the flat-state algorithm: swaps the populations of the basis
/// states (ancilla 0, marked) and (ancilla 1, marked).
PopulationState oracle_weak(const PopulationState& state, std::uint32_t marked_bits,
                            int n_work);

struct AncillaPeak {
  std::uint32_t work_config = 0;
  double amplitude = 0.0;  ///< pop(ancilla 0, config) - pop(ancilla 1, config)
};

/// Ancilla-spin readout: one peak per work configuration carrying any
/// population on either ancilla level.
std::vector<AncillaPeak> readout_ancilla(const PopulationState& state, int n_work);

}  // namespace spinsearch::weak

#endif  // SPINSEARCH_WEAK_HPP
