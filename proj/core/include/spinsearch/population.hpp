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

#ifndef SPINSEARCH_POPULATION_HPP
#define SPINSEARCH_POPULATION_HPP

#include <vector>

#include "spinsearch/eigensystem.hpp"

namespace spinsearch {

/// Diagonal density operator in the eigenbasis, tracked as a vector of
/// deviation populations. Selective pulses permute the entries, so the sum
/// and the multiset of values are conserved by every pulse sequence.
struct PopulationState {
  std::vector<double> pop;

  int dim() const { return static_cast<int>(pop.size()); }
  double total() const;

  static PopulationState zero(int dim);
};

PopulationState operator-(const PopulationState& a, const PopulationState& b);
PopulationState operator+(const PopulationState& a, const PopulationState& b);
PopulationState operator*(double s, const PopulationState& a);

/// High-temperature equilibrium deviation populations: pop[s] = M of state s
/// (unit scale). States of equal M carry equal population and the sum is zero.
PopulationState equilibrium_populations(const EigenSystem& eig);

}  // namespace spinsearch

#endif  // SPINSEARCH_POPULATION_HPP
