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

#ifndef SPINSEARCH_SEARCH_HPP
#define SPINSEARCH_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spinsearch/instance.hpp"
#include "spinsearch/pulses.hpp"
#include "spinsearch/spectrum.hpp"

namespace spinsearch {

/// The hidden marked state. Only the oracle application consults it; all
/// decision logic works from spectra alone.
struct OracleSpec {
  int n_work = 0;
  std::uint32_t marked_bits = 0;  ///< x_1 .. x_n, x_1 most significant

  std::string bits_string() const;
  /// 1-based index m of the marked state (m - 1 == marked_bits).
  static OracleSpec from_index(int n_work, int m);
};

/// Applies the oracle: a selective pi pulse on the marked state's ancilla
/// transition, swapping the populations of the (ancilla 0, marked) and
/// (ancilla 1, marked) levels. Everything else is untouched.
///
/// Throws UnsearchableState when that ancilla pair is missing from the
/// matching.
PopulationState apply_oracle(const PopulationState& state, const OracleSpec& oracle,
                             const Labeling& labeling, const TransitionTable& table);

struct BitDecision {
  int bit = -1;
  int positive = 0;
  int negative = 0;
};

/// Sign-count decision on a subtracted multi-frequency spectrum: equal
/// numbers of positive and negative peaks mean the work bit is 1, unequal
/// numbers mean 0. Peaks at or below the detection floor count as neither.
///
/// Throws EmptySpectrum when no peak survives the floor.
BitDecision decide_bit(const Spectrum& spectrum, double eps_rel = Spectrum::kPeakEpsilon);

struct ExperimentRecord {
  int k = 0;  ///< work qubit, 1-based
  int positive = 0;
  int negative = 0;
  int bit = -1;
  PulsePlan preparation_plan;
  Spectrum final_spectrum;  ///< subtracted spectrum the bit was decided on
};

struct SearchResult {
  int n_work = 0;
  std::uint32_t bits = 0;
  std::vector<ExperimentRecord> experiments;
  int experiments_run = 0;  ///< measured states: n + 1 (shared reference + n)
  int oracle_calls = 0;     ///< oracle applications inside the per-bit experiments

  std::string bits_string() const;
};

/// The full ensemble search on a labeled instance.
///
/// The reference spectrum of the oracle applied to equilibrium is measured
/// once and reused; each of the n per-bit experiments prepares an inverted
/// state, applies the oracle, reads out the ancilla matching and subtracts.
/// With one work qubit the positive/negative counts of the two outcomes
/// mirror each other exactly, so the decision degenerates to the flat-state
/// rule: any negative peak means the bit is 0.
SearchResult run_search(const LabeledInstance& instance, const OracleSpec& oracle,
                        double eps_rel = Spectrum::kPeakEpsilon);

/// Flat-state reference algorithm on ideal weakly coupled spins, built from
/// polarization-operator products. Exactly n oracle queries; a bit is 1 iff
/// the ancilla readout shows no negative peak.
SearchResult run_weak_search(int n_work, const OracleSpec& oracle);

struct CrossCheckReport {
  struct Mismatch {
    std::uint32_t marked = 0;
    std::uint32_t weak_bits = 0;
    std::uint32_t general_bits = 0;
  };
  int n_work = 0;
  int total = 0;
  int agreements = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty() && agreements == total; }
};

/// Runs both paths over every marked state of a conventionally labeled
/// weakly coupled reference system and compares the decided bits.
CrossCheckReport cross_check(int n_work);

}  // namespace spinsearch

#endif  // SPINSEARCH_SEARCH_HPP
