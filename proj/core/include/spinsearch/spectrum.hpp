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

#ifndef SPINSEARCH_SPECTRUM_HPP
#define SPINSEARCH_SPECTRUM_HPP

#include <vector>

#include "spinsearch/labeling.hpp"
#include "spinsearch/population.hpp"
#include "spinsearch/transitions.hpp"

namespace spinsearch {

struct Peak {
  int transition_id = -1;
  double frequency_hz = 0.0;
  double amplitude = 0.0;  ///< signed; population difference times line intensity
};

/// A stick spectrum. Peaks are kept in decreasing frequency order (the
/// spectrometer reads left to right), which coincides with ascending
/// transition id for table-derived spectra.
struct Spectrum {
  std::vector<Peak> peaks;

  /// Relative amplitude floor: |a| <= eps * max|a| counts as no peak.
  static constexpr double kPeakEpsilon = 1e-9;

  double max_abs_amplitude() const;
  /// Peaks above the detection floor.
  int significant_count(double eps_rel = kPeakEpsilon) const;
};

/// Linear-response readout ("small-angle pulse"): one peak per observed
/// transition, amplitude (pop[lower] - pop[upper]) * intensity. Transitions
/// with equal populations are emitted with amplitude 0.
Spectrum readout_small_angle(const PopulationState& state, const TransitionTable& table);

/// Multi-frequency readout on the ancilla matching: one peak per matched
/// work label, amplitude (pop[ancilla-0 level] - pop[ancilla-1 level]) *
/// intensity. Missing pairs contribute nothing.
Spectrum readout_mf(const PopulationState& state, const Labeling& labeling,
                    const TransitionTable& table);

/// Peakwise difference a - b; both spectra must cover the same transitions.
Spectrum subtract(const Spectrum& a, const Spectrum& b);

}  // namespace spinsearch

#endif  // SPINSEARCH_SPECTRUM_HPP
