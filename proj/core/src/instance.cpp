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

#include "spinsearch/instance.hpp"

namespace spinsearch {

LabeledInstance analyze(const SpinSystem& system, const LabelingConstraints& constraints,
                        int matching_cap) {
  LabeledInstance inst;
  inst.system = system;
  inst.eig = diagonalize(build_hamiltonian(system));
  inst.table = compute_transitions(inst.eig, system);

  const auto matchings = find_ancilla_matchings(inst.table, matching_cap);
  std::string last_error = "no candidate matching";
  for (const auto& matching : matchings) {
    try {
      inst.labeling = assign_labels(matching, inst.table, constraints);
      return inst;
    } catch (const ConstraintViolation& e) {
      last_error = e.what();
    }
  }
  throw ConstraintViolation(last_error);
}

LabeledInstance analyze(const SpinSystem& system) {
  const int n_work = system.n_spins - 1;
  if (n_work < 1) {
    throw ValidationError("search instances need at least two spins (ancilla + work)");
  }
  return analyze(system, LabelingConstraints::defaults(n_work));
}

LabeledInstance analyze_with_labeling(const SpinSystem& system, const Labeling& labeling) {
  LabeledInstance inst;
  inst.system = system;
  inst.eig = diagonalize(build_hamiltonian(system));
  inst.table = compute_transitions(inst.eig, system);
  const auto report = validate_labeling(labeling, inst.table);
  if (!report.ok()) {
    throw ValidationError("labeling override rejected: " + report.violations.front());
  }
  inst.labeling = labeling;
  return inst;
}

}  // namespace spinsearch
