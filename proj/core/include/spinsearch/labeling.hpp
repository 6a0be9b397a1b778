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

#ifndef SPINSEARCH_LABELING_HPP
#define SPINSEARCH_LABELING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spinsearch/transitions.hpp"

namespace spinsearch {

/// Bijection between the 2^(n+1) eigenstates and (n+1)-bit computational
/// labels. Label codes put the ancilla in the most significant bit, work
/// qubit 1 next, down to work qubit n in the least significant bit, matching
/// the ket notation |a w1 w2 ... wn>.
///
/// Every matched work label w owns one observed transition between the levels
/// labeled (0,w) and (1,w); those transitions are pairwise unconnected and
/// form the ancilla matching. Work labels whose ancilla line is unobserved
/// are listed in missing_pairs.
struct Labeling {
  int n_work = 0;
  std::vector<std::uint32_t> code;      ///< code[state]
  std::vector<int> level;               ///< level[code], inverse map
  std::vector<int> ancilla_transition;  ///< [work label] -> id, -1 if missing
  std::vector<std::uint32_t> missing_pairs;

  int total_bits() const { return n_work + 1; }
  int dim() const { return 1 << total_bits(); }
  /// Level labeled (ancilla, work).
  int level_of(int ancilla_bit, std::uint32_t work) const;
  /// Sorted ids of the matched ancilla transitions.
  std::vector<int> ancilla_matching() const;
  std::string label_string(int state) const;
};

/// Work labels whose levels must not be isolated in the observed graph.
/// The defaults are the support states of every searchable initial state:
/// all work labels except the all-ones one.
struct LabelingConstraints {
  std::vector<std::uint32_t> required_states;
  static LabelingConstraints defaults(int n_work);
};

/// Enumerates maximum matchings of the observed-transition graph: sets of
/// pairwise vertex-disjoint observed transitions of maximum size, in
/// lexicographic id order, capped (default 10000 per the enumeration budget).
///
/// Throws NoMatching when the table has no observed transition at all.
std::vector<std::vector<int>> find_ancilla_matchings(const TransitionTable& table,
                                                     int cap = 10000);

/// Maximum matching size of the observed-transition graph.
int maximum_matching_size(const TransitionTable& table);

/// Builds a labeling from an ancilla matching.
///
/// The lower level of each matched transition takes ancilla bit 0. States
/// left unmatched are paired in canonical order and surface as missing pairs.
/// Work labels are handed out by Hamming weight, then lexicographically, to
/// the pairs sorted by (M descending, energy ascending) of their ancilla-0
/// level; for a full matching this grades M with label weight, which keeps
/// every initial-state preparation's population differences nonzero. Pairs
/// whose ancilla-0 level is isolated are diverted to non-required labels.
///
/// Throws ConstraintViolation when more pairs are isolated than non-required
/// labels exist.
Labeling assign_labels(const std::vector<int>& matching, const TransitionTable& table,
                       const LabelingConstraints& constraints);

/// Independent re-check of all labeling invariants.
struct LabelingReport {
  std::vector<std::string> violations;
  std::vector<std::uint32_t> missing_pairs;
  std::vector<std::uint32_t> unsearchable;  ///< marked states the oracle cannot reach
  bool ok() const { return violations.empty(); }
};
LabelingReport validate_labeling(const Labeling& labeling, const TransitionTable& table);

/// Builds a labeling from explicit per-state codes (user override files and
/// constructed labelings); the ancilla matching is derived from the table.
Labeling labeling_from_codes(const std::vector<std::uint32_t>& codes,
                             const TransitionTable& table);

/// Weak-coupling convention: each eigenstate is labeled by its dominant
/// Zeeman product state. Throws ValidationError if that map is not a
/// bijection (the system is too strongly coupled to label this way).
Labeling conventional_labeling(const EigenSystem& eig, const TransitionTable& table);

}  // namespace spinsearch

#endif  // SPINSEARCH_LABELING_HPP
