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

#ifndef SPINSEARCH_SPIN_SYSTEM_HPP
#define SPINSEARCH_SPIN_SYSTEM_HPP

#include <Eigen/Dense>
#include <vector>

#include "spinsearch/errors.hpp"

namespace spinsearch {

/// A system of coupled spin-1/2 nuclei. All parameters are in Hz.
///
/// Spin 0 is the ancilla by convention; the remaining spins are the work
/// qubits of the search. Coupling matrices are symmetric with zero diagonal.
struct SpinSystem {
  int n_spins = 0;
  std::vector<double> shift_hz;                    ///< chemical shift per spin
  std::vector<std::vector<double>> dipolar_hz;     ///< D_ij
  std::vector<std::vector<double>> scalar_hz;      ///< J_ij
  /// Fraction of the strongest line below which a transition is unobserved.
  double intensity_threshold = 0.01;

  /// Zeroed couplings, zero shifts.
  static SpinSystem make(int n_spins);

  void set_dipolar(int i, int j, double hz);
  void set_scalar(int i, int j, double hz);

  /// Throws ValidationError naming the offending field / matrix cell.
  void validate() const;
};

/// Secular Hamiltonian in the Zeeman product basis, entries in Hz:
///
///   H = sum_i shift_i I_iz
///     + sum_{i<j} [ D_ij (3 I_iz I_jz - I_i.I_j) + J_ij I_i.I_j ]
///
/// The result is real symmetric and commutes with total F_z, so it is block
/// diagonal over the M blocks of the basis.
Eigen::MatrixXd build_hamiltonian(const SpinSystem& system);

}  // namespace spinsearch

#endif  // SPINSEARCH_SPIN_SYSTEM_HPP
