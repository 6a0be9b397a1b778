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

#include "spinsearch/population.hpp"

#include <numeric>

namespace spinsearch {

double PopulationState::total() const {
  return std::accumulate(pop.begin(), pop.end(), 0.0);
}

PopulationState PopulationState::zero(int dim) {
  return PopulationState{std::vector<double>(static_cast<std::size_t>(dim), 0.0)};
}

PopulationState operator-(const PopulationState& a, const PopulationState& b) {
  PopulationState r = a;
  for (std::size_t i = 0; i < r.pop.size(); ++i) r.pop[i] -= b.pop[i];
  return r;
}

PopulationState operator+(const PopulationState& a, const PopulationState& b) {
  PopulationState r = a;
  for (std::size_t i = 0; i < r.pop.size(); ++i) r.pop[i] += b.pop[i];
  return r;
}

PopulationState operator*(double s, const PopulationState& a) {
  PopulationState r = a;
  for (auto& p : r.pop) p *= s;
  return r;
}

PopulationState equilibrium_populations(const EigenSystem& eig) {
  PopulationState state;
  state.pop = eig.mz;
  return state;
}

}  // namespace spinsearch
