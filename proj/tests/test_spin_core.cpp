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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "spinsearch/basis.hpp"
#include "spinsearch/eigensystem.hpp"
#include "spinsearch/rng.hpp"
#include "spinsearch/spin_system.hpp"
#include "spinsearch/transitions.hpp"

using namespace spinsearch;

namespace {

// Independent construction of F+ = sum_i I_i^+ as an explicit matrix in the
// Zeeman basis: I^+ turns a beta spin into alpha.
Eigen::MatrixXd f_plus_matrix(int n) {
  const int dim = 1 << n;
  Eigen::MatrixXd fp = Eigen::MatrixXd::Zero(dim, dim);
  for (std::uint32_t z = 0; z < static_cast<std::uint32_t>(dim); ++z) {
    for (int i = 0; i < n; ++i) {
      if (spin_bit(z, i, n) == 1) {
        fp(static_cast<Eigen::Index>(flip_spin(z, i, n)), static_cast<Eigen::Index>(z)) = 1.0;
      }
    }
  }
  return fp;
}

Eigen::MatrixXd f_z_matrix(int n) {
  const int dim = 1 << n;
  Eigen::MatrixXd fz = Eigen::MatrixXd::Zero(dim, dim);
  for (std::uint32_t z = 0; z < static_cast<std::uint32_t>(dim); ++z) {
    fz(z, z) = basis_mz(z, n);
  }
  return fz;
}

// Closed-form eigenvalues of a two-spin system, diagonalizing the central
// 2x2 block by hand: the diagonal coupling is (2D + J) m1 m2 and the
// flip-flop element is (J - D)/2.
std::array<double, 4> two_spin_eigenvalues(double nu1, double nu2, double d, double j) {
  const double s = (nu1 + nu2) / 2.0;
  const double diag = (2.0 * d + j) / 4.0;
  const double delta = (nu1 - nu2) / 2.0;
  const double mix = (j - d) / 2.0;
  const double r = std::sqrt(delta * delta + mix * mix);
  return {s + diag, -diag + r, -diag - r, -s + diag};
}

}  // namespace

TEST_SUITE("spin_core") {

TEST_CASE("single spin Hamiltonian is the bare Zeeman term") {
  SpinSystem s = SpinSystem::make(1);
  s.shift_hz = {100.0};
  const auto h = build_hamiltonian(s);
  CHECK(h(0, 0) == doctest::Approx(50.0));
  CHECK(h(1, 1) == doctest::Approx(-50.0));
  CHECK(h(0, 1) == 0.0);
}

TEST_CASE("Hamiltonian is symmetric and commutes with F_z") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    for (int n : {2, 3, 4, 5}) {
      const SpinSystem s = random_strong_system(n, seed * 100 + static_cast<std::uint64_t>(n));
      const auto h = build_hamiltonian(s);
      CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
      const auto fz = f_z_matrix(n);
      const double comm = (h * fz - fz * h).norm();
      CHECK(comm <= 1e-10 * h.norm());
    }
  }
}

TEST_CASE("two-spin eigenvalues match the closed form") {
  SpinSystem s = SpinSystem::make(2);
  s.shift_hz = {0.0, 1000.0};
  s.set_scalar(0, 1, 10.0);
  const auto eig = diagonalize(build_hamiltonian(s));

  auto expected = two_spin_eigenvalues(0.0, 1000.0, 0.0, 10.0);
  std::vector<double> got = eig.energies;
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  for (int i = 0; i < 4; ++i) {
    CHECK(got[static_cast<std::size_t>(i)] == doctest::Approx(expected[static_cast<std::size_t>(i)]).epsilon(1e-12));
  }

  SUBCASE("also with a dipolar coupling") {
    s.set_dipolar(0, 1, 150.0);
    const auto eig2 = diagonalize(build_hamiltonian(s));
    auto exp2 = two_spin_eigenvalues(0.0, 1000.0, 150.0, 10.0);
    std::vector<double> got2 = eig2.energies;
    std::sort(got2.begin(), got2.end());
    std::sort(exp2.begin(), exp2.end());
    for (int i = 0; i < 4; ++i) {
      CHECK(got2[static_cast<std::size_t>(i)] ==
            doctest::Approx(exp2[static_cast<std::size_t>(i)]).epsilon(1e-12));
    }
  }
}

TEST_CASE("M blocks have binomial sizes and canonical order") {
  SUBCASE("two weakly coupled spins") {
    SpinSystem s = SpinSystem::make(2);
    s.shift_hz = {2000.0, 1000.0};
    s.set_scalar(0, 1, 5.0);
    const auto eig = diagonalize(build_hamiltonian(s));
    CHECK(eig.mz == std::vector<double>{1.0, 0.0, 0.0, -1.0});
  }
  SUBCASE("four spins") {
    const auto eig = diagonalize(build_hamiltonian(random_strong_system(4, 11)));
    std::array<int, 5> sizes{};
    for (int s = 0; s < 16; ++s) {
      ++sizes[static_cast<std::size_t>(eig.block[static_cast<std::size_t>(s)])];
    }
    CHECK(sizes == std::array<int, 5>{1, 4, 6, 4, 1});
    // M descending, energy ascending inside each block
    for (int s = 1; s < 16; ++s) {
      const auto i = static_cast<std::size_t>(s);
      if (eig.block[i] == eig.block[i - 1]) {
        CHECK(eig.energies[i] >= eig.energies[i - 1]);
      } else {
        CHECK(eig.mz[i] < eig.mz[i - 1]);
      }
    }
  }
}

TEST_CASE("spectral reconstruction and residuals") {
  for (std::uint64_t seed : {21u, 22u, 23u}) {
    const auto h = build_hamiltonian(random_strong_system(4, seed));
    const auto eig = diagonalize(h);
    Eigen::MatrixXd rebuilt = Eigen::MatrixXd::Zero(16, 16);
    for (int s = 0; s < 16; ++s) {
      rebuilt += eig.energies[static_cast<std::size_t>(s)] * eig.vectors.col(s) *
                 eig.vectors.col(s).transpose();
    }
    CHECK((rebuilt - h).norm() <= 1e-8 * h.norm());
    for (int s = 0; s < 16; ++s) {
      const double resid =
          (h * eig.vectors.col(s) - eig.energies[static_cast<std::size_t>(s)] * eig.vectors.col(s))
              .norm();
      CHECK(resid <= 1e-9 * h.norm());
    }
    // orthonormality
    CHECK((eig.vectors.transpose() * eig.vectors - Eigen::MatrixXd::Identity(16, 16))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
  }
}

TEST_CASE("eigenvectors stay inside one M block") {
  const auto eig = diagonalize(build_hamiltonian(random_strong_system(4, 5)));
  for (int s = 0; s < eig.dim; ++s) {
    for (int z = 0; z < eig.dim; ++z) {
      if (beta_count(static_cast<std::uint32_t>(z)) != eig.block[static_cast<std::size_t>(s)]) {
        CHECK(eig.vectors(z, s) == 0.0);
      }
    }
  }
}

TEST_CASE("non-block-diagonal input is rejected") {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(4, 4);
  h(0, 3) = h(3, 0) = 1.0;  // couples M=+1 to M=-1
  CHECK_THROWS_AS(diagonalize(h), ValidationError);
}

TEST_CASE("single spin has one unit-intensity line at its shift") {
  SpinSystem s = SpinSystem::make(1);
  s.shift_hz = {100.0};
  const auto eig = diagonalize(build_hamiltonian(s));
  const auto table = compute_transitions(eig, s);
  REQUIRE(table.transitions.size() == 1);
  CHECK(table.transitions[0].frequency_hz == doctest::Approx(100.0));
  CHECK(table.transitions[0].intensity == doctest::Approx(1.0));
  CHECK(table.transitions[0].observed);
}

TEST_CASE("strongly coupled pair shows the roof effect") {
  SpinSystem s = SpinSystem::make(2);
  s.shift_hz = {0.0, 60.0};
  s.set_scalar(0, 1, 40.0);
  const auto eig = diagonalize(build_hamiltonian(s));
  const auto table = compute_transitions(eig, s);

  std::vector<Transition> observed;
  for (const auto& t : table.transitions) {
    if (t.observed) observed.push_back(t);
  }
  REQUIRE(observed.size() == 4);
  // ids are ordered by decreasing frequency; the inner pair is stronger
  CHECK(observed[1].intensity > observed[0].intensity);
  CHECK(observed[2].intensity > observed[3].intensity);

  // intensities against the explicit F+ matrix element
  const auto fp = f_plus_matrix(2);
  for (const auto& t : observed) {
    const double amp =
        eig.vectors.col(t.lower_state).transpose() * fp * eig.vectors.col(t.upper_state);
    CHECK(t.intensity == doctest::Approx(amp * amp).epsilon(1e-12));
  }
}

TEST_CASE("intensity sum rule against trace(F- F+)") {
  for (int n : {2, 3, 4}) {
    const SpinSystem s = random_strong_system(n, 31 + static_cast<std::uint64_t>(n));
    const auto eig = diagonalize(build_hamiltonian(s));
    const auto table = compute_transitions(eig, s);
    double sum = 0.0;
    for (const auto& t : table.transitions) sum += t.intensity;
    const auto fp = f_plus_matrix(n);
    const double trace = (fp.transpose() * fp).trace();
    CHECK(sum == doctest::Approx(trace).epsilon(1e-8));
  }
}

TEST_CASE("every transition connects adjacent M blocks with positive intensity") {
  const SpinSystem s = random_strong_system(4, 77);
  const auto eig = diagonalize(build_hamiltonian(s));
  const auto table = compute_transitions(eig, s);
  for (const auto& t : table.transitions) {
    CHECK(table.level_mz[static_cast<std::size_t>(t.lower_state)] -
              table.level_mz[static_cast<std::size_t>(t.upper_state)] ==
          doctest::Approx(1.0));
    CHECK(t.frequency_hz ==
          doctest::Approx(table.level_energy[static_cast<std::size_t>(t.lower_state)] -
                          table.level_energy[static_cast<std::size_t>(t.upper_state)]));
    CHECK(t.intensity >= 0.0);
  }
}

TEST_CASE("low-intensity lines are flagged unobserved") {
  // strong coupling produces combination lines far below the main lines
  const SpinSystem s = random_strong_system(4, 101);
  const auto eig = diagonalize(build_hamiltonian(s));
  const auto table = compute_transitions(eig, s);
  int unobserved = 0;
  double max_intensity = 0.0;
  for (const auto& t : table.transitions) max_intensity = std::max(max_intensity, t.intensity);
  for (const auto& t : table.transitions) {
    if (!t.observed) {
      ++unobserved;
      CHECK(t.intensity < s.intensity_threshold * max_intensity);
    }
  }
  CHECK(unobserved > 0);
  CHECK(table.transitions.size() == 1 * 4 + 4 * 6 + 6 * 4 + 4 * 1);
}

TEST_CASE("weak-coupling limit reproduces first-order line positions") {
  const int n = 3;
  SpinSystem s = SpinSystem::make(n);
  s.shift_hz = {3000.0, 2000.0, 1000.0};
  s.set_scalar(0, 1, 10.0);
  s.set_scalar(0, 2, 6.0);
  s.set_scalar(1, 2, 4.0);
  const auto eig = diagonalize(build_hamiltonian(s));
  const auto table = compute_transitions(eig, s);

  // first order: spin i resonates at shift_i + sum_j (+-J_ij / 2)
  std::set<int> matched;
  for (const auto& t : table.transitions) {
    if (!t.observed) continue;
    bool found = false;
    for (int i = 0; i < n && !found; ++i) {
      for (int signs = 0; signs < (1 << (n - 1)) && !found; ++signs) {
        double f = s.shift_hz[static_cast<std::size_t>(i)];
        int bit = 0;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          const double jij = s.scalar_hz[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          f += ((signs >> bit) & 1) != 0 ? jij / 2.0 : -jij / 2.0;
          ++bit;
        }
        if (std::abs(f - t.frequency_hz) <= 0.1 * 10.0) found = true;
      }
    }
    CHECK(found);
    matched.insert(t.id);
  }
  CHECK(matched.size() == 3 * 4);  // each spin shows 2^(n-1) first-order lines
}

TEST_CASE("connectivity is symmetric and irreflexive") {
  const SpinSystem s = random_strong_system(3, 8);
  const auto eig = diagonalize(build_hamiltonian(s));
  const auto table = compute_transitions(eig, s);
  for (const auto& t : table.transitions) {
    const auto& adj = table.adjacency[static_cast<std::size_t>(t.id)];
    CHECK(std::find(adj.begin(), adj.end(), t.id) == adj.end());
    for (int other : adj) {
      const auto& back = table.adjacency[static_cast<std::size_t>(other)];
      CHECK(std::find(back.begin(), back.end(), t.id) != back.end());
      // connected means sharing an eigenstate
      const auto& u = table.at(other);
      const bool share = t.lower_state == u.lower_state || t.lower_state == u.upper_state ||
                         t.upper_state == u.lower_state || t.upper_state == u.upper_state;
      CHECK(share);
    }
  }
}

TEST_CASE("deterministic across repeated runs") {
  const SpinSystem s = random_strong_system(4, 404);
  const auto eig1 = diagonalize(build_hamiltonian(s));
  const auto eig2 = diagonalize(build_hamiltonian(s));
  CHECK(eig1.energies == eig2.energies);
  CHECK((eig1.vectors - eig2.vectors).cwiseAbs().maxCoeff() == 0.0);
  const auto t1 = compute_transitions(eig1, s);
  const auto t2 = compute_transitions(eig2, s);
  REQUIRE(t1.transitions.size() == t2.transitions.size());
  for (std::size_t i = 0; i < t1.transitions.size(); ++i) {
    CHECK(t1.transitions[i].frequency_hz == t2.transitions[i].frequency_hz);
    CHECK(t1.transitions[i].intensity == t2.transitions[i].intensity);
  }
}

TEST_CASE("validation rejects malformed systems") {
  SpinSystem s = SpinSystem::make(3);
  s.shift_hz = {1.0, 2.0, 3.0};
  s.dipolar_hz[0][1] = 5.0;  // asymmetric on purpose
  CHECK_THROWS_WITH_AS(static_cast<void>(build_hamiltonian(s)),
                       doctest::Contains("dipolar_hz[0][1]"), ValidationError);

  SpinSystem bad_diag = SpinSystem::make(2);
  bad_diag.shift_hz = {1.0, 2.0};
  bad_diag.dipolar_hz[1][1] = 3.0;
  CHECK_THROWS_AS(static_cast<void>(build_hamiltonian(bad_diag)), ValidationError);

  SpinSystem bad_threshold = SpinSystem::make(2);
  bad_threshold.shift_hz = {1.0, 2.0};
  bad_threshold.intensity_threshold = 1.5;
  CHECK_THROWS_AS(static_cast<void>(build_hamiltonian(bad_threshold)), ValidationError);
}

}  // TEST_SUITE
