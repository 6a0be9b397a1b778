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

#ifndef SPINSEARCH_EIGENSYSTEM_HPP
#define SPINSEARCH_EIGENSYSTEM_HPP

#include <Eigen/Dense>
#include <vector>

#include "spinsearch/errors.hpp"

namespace spinsearch {

/// Eigenstates of the spin Hamiltonian in canonical order: blocks of total M
/// descending, energy ascending inside each block. Exact degeneracies are
/// broken by lexicographic comparison of eigenvector components rounded to
/// 1e-8, so the order is reproducible.
struct EigenSystem {
  int n_spins = 0;
  int dim = 0;
  std::vector<double> energies;  ///< Hz, canonical order
  Eigen::MatrixXd vectors;       ///< column s = eigenvector of state s
  std::vector<double> mz;        ///< total M of the block holding state s
  std::vector<int> block;        ///< beta count of that block (0 = top)
};

/// Diagonalizes a Hamiltonian from build_hamiltonian, block by M block.
///
/// Requires the matrix to be F_z-commuting (no entries between different M
/// blocks); each eigenvector then has support in exactly one block. Sign
/// convention: the largest-magnitude component of each vector is positive.
///
/// Throws ConvergenceFailure if a block solve does not converge and
/// ValidationError if the input is not block diagonal over M.
EigenSystem diagonalize(const Eigen::MatrixXd& hamiltonian);

/// Basis indices of each M block (beta count 0..n), ascending within a block.
std::vector<std::vector<int>> block_basis(int n_spins);

}  // namespace spinsearch

#endif  // SPINSEARCH_EIGENSYSTEM_HPP
