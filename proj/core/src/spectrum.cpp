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

#include "spinsearch/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace spinsearch {

double Spectrum::max_abs_amplitude() const {
  double m = 0.0;
  for (const auto& p : peaks) m = std::max(m, std::abs(p.amplitude));
  return m;
}

int Spectrum::significant_count(double eps_rel) const {
  const double floor = eps_rel * max_abs_amplitude();
  int count = 0;
  for (const auto& p : peaks) {
    if (std::abs(p.amplitude) > floor) ++count;
  }
  return count;
}

namespace {

void sort_by_frequency(Spectrum& s) {
  std::sort(s.peaks.begin(), s.peaks.end(), [](const Peak& a, const Peak& b) {
    if (a.frequency_hz != b.frequency_hz) return a.frequency_hz > b.frequency_hz;
    return a.transition_id < b.transition_id;
  });
}

}  // namespace

Spectrum readout_small_angle(const PopulationState& state, const TransitionTable& table) {
  Spectrum s;
  for (const auto& t : table.transitions) {
    if (!t.observed) continue;
    const double diff = state.pop[static_cast<std::size_t>(t.lower_state)] -
                        state.pop[static_cast<std::size_t>(t.upper_state)];
    s.peaks.push_back({t.id, t.frequency_hz, diff * t.intensity});
  }
  sort_by_frequency(s);
  return s;
}

Spectrum readout_mf(const PopulationState& state, const Labeling& labeling,
                    const TransitionTable& table) {
  Spectrum s;
  for (std::uint32_t w = 0; w < (1u << labeling.n_work); ++w) {
    const int tid = labeling.ancilla_transition[w];
    if (tid < 0) continue;
    const Transition& t = table.at(tid);
    const double diff = state.pop[static_cast<std::size_t>(labeling.level_of(0, w))] -
                        state.pop[static_cast<std::size_t>(labeling.level_of(1, w))];
    s.peaks.push_back({t.id, t.frequency_hz, diff * t.intensity});
  }
  sort_by_frequency(s);
  return s;
}

Spectrum subtract(const Spectrum& a, const Spectrum& b) {
  if (a.peaks.size() != b.peaks.size()) {
    throw ValidationError("spectra cover different transition sets");
  }
  Spectrum out = a;
  for (std::size_t i = 0; i < out.peaks.size(); ++i) {
    if (out.peaks[i].transition_id != b.peaks[i].transition_id) {
      throw ValidationError("spectra cover different transition sets");
    }
    out.peaks[i].amplitude -= b.peaks[i].amplitude;
  }
  return out;
}

}  // namespace spinsearch
