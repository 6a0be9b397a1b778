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

#ifndef SPINSEARCH_INSTANCE_HPP
#define SPINSEARCH_INSTANCE_HPP

#include "spinsearch/labeling.hpp"
#include "spinsearch/spin_system.hpp"
#include "spinsearch/transitions.hpp"

namespace spinsearch {

/// A spin system analyzed end to end: Hamiltonian diagonalized, transition
/// table built, eigenstates labeled. The protocol operations run on this.
struct LabeledInstance {
  SpinSystem system;
  EigenSystem eig;
  TransitionTable table;
  Labeling labeling;
};

/// Full pipeline with automatic labeling: tries the enumerated maximum
/// matchings in order and keeps the first whose label assignment satisfies
/// the constraints. Errors from the stages propagate (NoMatching,
/// ConstraintViolation, ...).
LabeledInstance analyze(const SpinSystem& system,
                        const LabelingConstraints& constraints, int matching_cap = 10000);
LabeledInstance analyze(const SpinSystem& system);

/// Pipeline with a caller-supplied labeling (override files, constructed
/// labelings). The labeling is validated against the table.
LabeledInstance analyze_with_labeling(const SpinSystem& system, const Labeling& labeling);

}  // namespace spinsearch

#endif  // SPINSEARCH_INSTANCE_HPP
