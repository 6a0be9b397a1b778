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

#include "spinsearch/weak.hpp"

#include <utility>

#include "spinsearch/basis.hpp"
#include "spinsearch/errors.hpp"

namespace spinsearch::weak {

PolarizationProduct PolarizationProduct::all_identity(int n_spins) {
  PolarizationProduct p;
  p.factors.assign(static_cast<std::size_t>(n_spins), Factor::identity);
  return p;
}

PolarizationProduct PolarizationProduct::basis_projector(std::uint32_t z, int n_spins) {
  PolarizationProduct p;
  p.factors.resize(static_cast<std::size_t>(n_spins));
  for (int i = 0; i < n_spins; ++i) {
    p.factors[static_cast<std::size_t>(i)] =
        spin_bit(z, i, n_spins) == 0 ? Factor::alpha : Factor::beta;
  }
  return p;
}

PopulationState expand(const PolarizationProduct& product) {
  const int n = product.n_spins();
  const std::uint32_t dim = 1u << n;
  PopulationState state = PopulationState::zero(static_cast<int>(dim));
  for (std::uint32_t z = 0; z < dim; ++z) {
    bool consistent = true;
    for (int i = 0; i < n && consistent; ++i) {
      switch (product.factors[static_cast<std::size_t>(i)]) {
        case Factor::alpha:
          consistent = spin_bit(z, i, n) == 0;
          break;
        case Factor::beta:
          consistent = spin_bit(z, i, n) == 1;
          break;
        case Factor::identity:
          break;
      }
    }
    if (consistent) state.pop[z] = 1.0;
  }
  return state;
}

PopulationState oracle_weak(const PopulationState& state, std::uint32_t marked_bits,
                            int n_work) {
  if (state.dim() != (2 << n_work)) {
    throw ValidationError("state dimension does not match n_work + 1 spins");
  }
  PopulationState out = state;
  const std::uint32_t z0 = marked_bits;                              // ancilla alpha
  const std::uint32_t z1 = marked_bits | (1u << n_work);             // ancilla beta
  std::swap(out.pop[z0], out.pop[z1]);
  return out;
}

std::vector<AncillaPeak> readout_ancilla(const PopulationState& state, int n_work) {
  std::vector<AncillaPeak> peaks;
  for (std::uint32_t cfg = 0; cfg < (1u << n_work); ++cfg) {
    const double p0 = state.pop[cfg];
    const double p1 = state.pop[cfg | (1u << n_work)];
    if (p0 != 0.0 || p1 != 0.0) {
      peaks.push_back({cfg, p0 - p1});
    }
  }
  return peaks;
}

}  // namespace spinsearch::weak
