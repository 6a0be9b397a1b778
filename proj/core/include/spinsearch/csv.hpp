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

#ifndef SPINSEARCH_CSV_HPP
#define SPINSEARCH_CSV_HPP

#include <string>

#include "spinsearch/labeling.hpp"
#include "spinsearch/pulses.hpp"
#include "spinsearch/spectrum.hpp"

namespace spinsearch {

/// Shortest round-trip-safe decimal rendering used by every emitter, so
/// identical values always produce identical bytes.
std::string format_number(double value);

// CSV schemas. All emitters return the full file contents; writers are in
// the CLI layer.
//
//   levels:      state_index,M,energy_hz
//   transitions: transition_id,lower_state,upper_state,frequency_hz,intensity,observed
//   labeling:    state_index,M,energy_hz,label_bits
//   spectrum:    transition_id,frequency_hz,amplitude

std::string levels_csv(const TransitionTable& table);
std::string transitions_csv(const TransitionTable& table);
std::string labeling_csv(const Labeling& labeling, const TransitionTable& table);
std::string spectrum_csv(const Spectrum& spectrum);

/// Parses a labeling CSV (the labeling_csv schema above) against a table.
/// State indices must cover 0..dim-1; the ancilla matching is re-derived.
Labeling parse_labeling_csv(const std::string& text, const TransitionTable& table);
Labeling load_labeling_csv(const std::string& path, const TransitionTable& table);

/// Pulse program: '# ...' comments and one 'pi <transition_id>' line per
/// selective pulse, applied top to bottom.
std::string pulse_program(const PulsePlan& plan, const TransitionTable& table);

}  // namespace spinsearch

#endif  // SPINSEARCH_CSV_HPP
