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

#include "spinsearch/search.hpp"

#include <cmath>

#include "spinsearch/basis.hpp"
#include "spinsearch/rng.hpp"
#include "spinsearch/weak.hpp"

namespace spinsearch {

std::string OracleSpec::bits_string() const { return bit_string(marked_bits, n_work); }

OracleSpec OracleSpec::from_index(int n_work, int m) {
  if (m < 1 || m > (1 << n_work)) {
    throw ValidationError("marked state index must be in [1, " +
                          std::to_string(1 << n_work) + "]");
  }
  return OracleSpec{n_work, static_cast<std::uint32_t>(m - 1)};
}

PopulationState apply_oracle(const PopulationState& state, const OracleSpec& oracle,
                             const Labeling& labeling, const TransitionTable& table) {
  if (oracle.n_work != labeling.n_work) {
    throw ValidationError("oracle and labeling disagree on the number of work qubits");
  }
  const int tid = labeling.ancilla_transition[oracle.marked_bits];
  if (tid < 0) {
    throw UnsearchableState("ancilla transition of marked state " + oracle.bits_string() +
                            " is not observed; the oracle pulse cannot be applied");
  }
  return apply_pi(state, tid, table);
}

BitDecision decide_bit(const Spectrum& spectrum, double eps_rel) {
  const double floor = eps_rel * spectrum.max_abs_amplitude();
  BitDecision d;
  for (const auto& p : spectrum.peaks) {
    if (p.amplitude > floor) {
      ++d.positive;
    } else if (p.amplitude < -floor) {
      ++d.negative;
    }
  }
  if (d.positive + d.negative == 0) {
    throw EmptySpectrum("no peak survives the detection floor");
  }
  d.bit = d.positive == d.negative ? 1 : 0;
  return d;
}

SearchResult run_search(const LabeledInstance& instance, const OracleSpec& oracle,
                        double eps_rel) {
  const Labeling& labeling = instance.labeling;
  const TransitionTable& table = instance.table;
  const int n = labeling.n_work;
  if (oracle.n_work != n) {
    throw ValidationError("oracle sized for " + std::to_string(oracle.n_work) +
                          " work qubits, instance has " + std::to_string(n));
  }

  const PopulationState eq = equilibrium_populations(instance.eig);

  // All preparations are compiled up front; infeasibility surfaces before
  // any experiment runs.
  std::vector<Preparation> preparations;
  preparations.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    preparations.push_back(prepare_initial(k, labeling, table, eq));
  }

  SearchResult result;
  result.n_work = n;

  // Shared reference experiment: oracle on equilibrium, measured once.
  const Spectrum ref = readout_mf(apply_oracle(eq, oracle, labeling, table), labeling, table);
  result.experiments_run = 1;

  for (int k = 1; k <= n; ++k) {
    const Preparation& prep = preparations[static_cast<std::size_t>(k - 1)];
    const PopulationState flipped = apply_oracle(prep.rho_k, oracle, labeling, table);
    ++result.oracle_calls;
    const Spectrum final_spectrum = subtract(ref, readout_mf(flipped, labeling, table));
    ++result.experiments_run;

    BitDecision d = decide_bit(final_spectrum, eps_rel);
    if (n == 1) {
      d.bit = d.negative > 0 ? 0 : 1;
    }
    ExperimentRecord rec;
    rec.k = k;
    rec.positive = d.positive;
    rec.negative = d.negative;
    rec.bit = d.bit;
    rec.preparation_plan = prep.plan;
    rec.final_spectrum = final_spectrum;
    result.experiments.push_back(std::move(rec));
    result.bits = (result.bits << 1) | static_cast<std::uint32_t>(d.bit);
  }
  return result;
}

std::string SearchResult::bits_string() const { return bit_string(bits, n_work); }

SearchResult run_weak_search(int n_work, const OracleSpec& oracle) {
  if (oracle.n_work != n_work) {
    throw ValidationError("oracle sized for a different number of work qubits");
  }
  const int n_total = n_work + 1;

  SearchResult result;
  result.n_work = n_work;
  for (int k = 1; k <= n_work; ++k) {
    auto product = weak::PolarizationProduct::all_identity(n_total);
    product.factors[0] = weak::Factor::alpha;
    product.factors[static_cast<std::size_t>(k)] = weak::Factor::alpha;

    PopulationState rho = weak::expand(product);
    rho = weak::oracle_weak(rho, oracle.marked_bits, n_work);
    ++result.oracle_calls;
    ++result.experiments_run;

    const auto peaks = weak::readout_ancilla(rho, n_work);
    ExperimentRecord rec;
    rec.k = k;
    for (const auto& p : peaks) {
      if (p.amplitude > 0) ++rec.positive;
      if (p.amplitude < 0) ++rec.negative;
    }
    rec.bit = rec.negative > 0 ? 0 : 1;
    result.bits = (result.bits << 1) | static_cast<std::uint32_t>(rec.bit);
    result.experiments.push_back(std::move(rec));
  }
  return result;
}

CrossCheckReport cross_check(int n_work) {
  if (n_work < 1 || n_work > 6) {
    throw ValidationError("cross check supports 1..6 work qubits");
  }
  const SpinSystem system = weak_reference_system(n_work + 1);
  const Eigen::MatrixXd h = build_hamiltonian(system);
  const EigenSystem eig = diagonalize(h);
  const TransitionTable table = compute_transitions(eig, system);
  const Labeling labeling = conventional_labeling(eig, table);

  LabeledInstance inst;
  inst.system = system;
  inst.eig = eig;
  inst.table = table;
  inst.labeling = labeling;

  CrossCheckReport report;
  report.n_work = n_work;
  report.total = 1 << n_work;
  for (std::uint32_t m = 0; m < (1u << n_work); ++m) {
    const OracleSpec oracle{n_work, m};
    const auto weak_bits = run_weak_search(n_work, oracle).bits;
    const auto general_bits = run_search(inst, oracle).bits;
    if (weak_bits == general_bits) {
      ++report.agreements;
    } else {
      report.mismatches.push_back({m, weak_bits, general_bits});
    }
  }
  return report;
}

}  // namespace spinsearch
