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

#include "spinsearch/eigensystem.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "spinsearch/basis.hpp"

namespace spinsearch {

std::vector<std::vector<int>> block_basis(int n_spins) {
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(n_spins) + 1);
  const std::uint32_t dim = 1u << n_spins;
  for (std::uint32_t z = 0; z < dim; ++z) {
    blocks[static_cast<std::size_t>(beta_count(z))].push_back(static_cast<int>(z));
  }
  return blocks;
}

namespace {

// Deterministic tie-break for exactly degenerate eigenvalues.
bool lex_less_rounded(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const auto ra = std::llround(a[i] * 1e8);
    const auto rb = std::llround(b[i] * 1e8);
    if (ra != rb) return ra < rb;
  }
  return false;
}

}  // namespace

EigenSystem diagonalize(const Eigen::MatrixXd& hamiltonian) {
  const int dim = static_cast<int>(hamiltonian.rows());
  if (dim < 2 || hamiltonian.cols() != dim || (dim & (dim - 1)) != 0) {
    throw ValidationError("hamiltonian must be square with power-of-two dimension");
  }
  int n = 0;
  while ((1 << n) < dim) ++n;

  const double scale = std::max(1.0, hamiltonian.cwiseAbs().maxCoeff());

  EigenSystem eig;
  eig.n_spins = n;
  eig.dim = dim;
  eig.energies.reserve(static_cast<std::size_t>(dim));
  eig.mz.reserve(static_cast<std::size_t>(dim));
  eig.block.reserve(static_cast<std::size_t>(dim));
  eig.vectors = Eigen::MatrixXd::Zero(dim, dim);

  const auto blocks = block_basis(n);

  // Entries between different M blocks would be silently dropped below.
  for (int z = 0; z < dim; ++z) {
    for (int z2 = 0; z2 < dim; ++z2) {
      if (beta_count(static_cast<std::uint32_t>(z)) !=
              beta_count(static_cast<std::uint32_t>(z2)) &&
          std::abs(hamiltonian(z, z2)) > 1e-9 * scale) {
        throw ValidationError("hamiltonian does not commute with total F_z");
      }
    }
  }

  int out = 0;
  for (int k = 0; k <= n; ++k) {
    const auto& basis = blocks[static_cast<std::size_t>(k)];
    const int bs = static_cast<int>(basis.size());
    Eigen::MatrixXd sub(bs, bs);
    for (int r = 0; r < bs; ++r) {
      for (int c = 0; c < bs; ++c) {
        sub(r, c) = hamiltonian(basis[static_cast<std::size_t>(r)],
                                basis[static_cast<std::size_t>(c)]);
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sub);
    if (solver.info() != Eigen::Success) {
      throw ConvergenceFailure("eigensolver failed on M block with beta count " +
                               std::to_string(k));
    }

    std::vector<int> order(static_cast<std::size_t>(bs));
    std::iota(order.begin(), order.end(), 0);
    std::vector<Eigen::VectorXd> full(static_cast<std::size_t>(bs));
    for (int c = 0; c < bs; ++c) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
      for (int r = 0; r < bs; ++r) {
        v[basis[static_cast<std::size_t>(r)]] = solver.eigenvectors()(r, c);
      }
      // fix the overall sign: largest-magnitude component positive
      Eigen::Index imax = 0;
      v.cwiseAbs().maxCoeff(&imax);
      if (v[imax] < 0.0) v = -v;
      full[static_cast<std::size_t>(c)] = std::move(v);
    }
    const double tie = 1e-8 * scale;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      const double ea = solver.eigenvalues()[a];
      const double eb = solver.eigenvalues()[b];
      if (std::abs(ea - eb) > tie) return ea < eb;
      return lex_less_rounded(full[static_cast<std::size_t>(a)],
                              full[static_cast<std::size_t>(b)]);
    });

    for (int c : order) {
      eig.energies.push_back(solver.eigenvalues()[c]);
      eig.vectors.col(out) = full[static_cast<std::size_t>(c)];
      eig.mz.push_back(0.5 * (n - 2 * k));
      eig.block.push_back(k);
      ++out;
    }
  }
  return eig;
}

}  // namespace spinsearch
