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

#include "spinsearch/spin_system.hpp"

#include <cmath>
#include <string>

#include "spinsearch/basis.hpp"

namespace spinsearch {

SpinSystem SpinSystem::make(int n_spins) {
  SpinSystem s;
  s.n_spins = n_spins;
  s.shift_hz.assign(static_cast<std::size_t>(n_spins), 0.0);
  s.dipolar_hz.assign(static_cast<std::size_t>(n_spins),
                      std::vector<double>(static_cast<std::size_t>(n_spins), 0.0));
  s.scalar_hz = s.dipolar_hz;
  return s;
}

void SpinSystem::set_dipolar(int i, int j, double hz) {
  dipolar_hz[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = hz;
  dipolar_hz[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = hz;
}

void SpinSystem::set_scalar(int i, int j, double hz) {
  scalar_hz[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = hz;
  scalar_hz[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = hz;
}

namespace {

void check_coupling_matrix(const std::vector<std::vector<double>>& m, int n,
                           const char* name) {
  if (static_cast<int>(m.size()) != n) {
    throw ValidationError(std::string(name) + ": expected " + std::to_string(n) +
                          " rows, got " + std::to_string(m.size()));
  }
  for (int i = 0; i < n; ++i) {
    const auto& row = m[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != n) {
      throw ValidationError(std::string(name) + ": row " + std::to_string(i) +
                            " has " + std::to_string(row.size()) + " entries, expected " +
                            std::to_string(n));
    }
    if (row[static_cast<std::size_t>(i)] != 0.0) {
      throw ValidationError(std::string(name) + "[" + std::to_string(i) + "][" +
                            std::to_string(i) + "] must be 0");
    }
    for (int j = 0; j < n; ++j) {
      const double a = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const double b = m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (a != b) {
        throw ValidationError(std::string(name) + "[" + std::to_string(i) + "][" +
                              std::to_string(j) + "] != " + name + "[" + std::to_string(j) +
                              "][" + std::to_string(i) + "] (" + std::to_string(a) + " vs " +
                              std::to_string(b) + ")");
      }
    }
  }
}

}  // namespace

void SpinSystem::validate() const {
  if (n_spins < 1) throw ValidationError("n_spins must be >= 1");
  if (n_spins > 20) throw ValidationError("n_spins too large for a dense register");
  if (static_cast<int>(shift_hz.size()) != n_spins) {
    throw ValidationError("shift_hz: expected " + std::to_string(n_spins) +
                          " entries, got " + std::to_string(shift_hz.size()));
  }
  for (int i = 0; i < n_spins; ++i) {
    if (!std::isfinite(shift_hz[static_cast<std::size_t>(i)])) {
      throw ValidationError("shift_hz[" + std::to_string(i) + "] is not finite");
    }
  }
  check_coupling_matrix(dipolar_hz, n_spins, "dipolar_hz");
  check_coupling_matrix(scalar_hz, n_spins, "scalar_hz");
  if (!(intensity_threshold >= 0.0 && intensity_threshold < 1.0)) {
    throw ValidationError("intensity_threshold must be in [0, 1)");
  }
}

Eigen::MatrixXd build_hamiltonian(const SpinSystem& system) {
  system.validate();
  const int n = system.n_spins;
  const int dim = 1 << n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

  for (std::uint32_t z = 0; z < static_cast<std::uint32_t>(dim); ++z) {
    double diag = 0.0;
    for (int i = 0; i < n; ++i) {
      const double mi = spin_bit(z, i, n) == 0 ? 0.5 : -0.5;
      diag += system.shift_hz[static_cast<std::size_t>(i)] * mi;
      for (int j = i + 1; j < n; ++j) {
        const double mj = spin_bit(z, j, n) == 0 ? 0.5 : -0.5;
        const double d = system.dipolar_hz[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        const double jj = system.scalar_hz[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        // D (3 Iz Iz - I.I) contributes 2 D m_i m_j on the diagonal,
        // J I.I contributes J m_i m_j.
        diag += (2.0 * d + jj) * mi * mj;
      }
    }
    h(z, z) = diag;

    // flip-flop part of I_i.I_j: (J - D)/2 between states with spins i, j opposed
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (spin_bit(z, i, n) != spin_bit(z, j, n)) {
          const std::uint32_t z2 = flip_spin(flip_spin(z, i, n), j, n);
          const double d = system.dipolar_hz[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          const double jj = system.scalar_hz[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          h(z, z2) = (jj - d) / 2.0;
        }
      }
    }
  }
  return h;
}

}  // namespace spinsearch
