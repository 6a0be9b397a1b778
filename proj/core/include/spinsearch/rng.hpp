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

#ifndef SPINSEARCH_RNG_HPP
#define SPINSEARCH_RNG_HPP

#include <cstdint>
#include <random>

#include "spinsearch/spin_system.hpp"

namespace spinsearch {

/// Deterministic random source. The mapping from raw mt19937_64 draws to
/// uniform doubles is spelled out here instead of using the standard
/// distributions, whose output is implementation defined; identical seeds
/// therefore give identical instances on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  ///< inclusive bounds
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Synthetic strongly coupled system: shifts in [-400, 400] Hz, dipolar
/// couplings in [-250, 250] Hz (comparable to the shift differences),
/// scalar couplings in [0, 15] Hz.
SpinSystem random_strong_system(int n_spins, std::uint64_t seed);

/// Idealized weakly coupled reference: shifts 1000 * (n - i) Hz descending,
/// so the ancilla spin resonates at the highest frequency, distinct small
/// scalar couplings and no dipolar coupling.
SpinSystem weak_reference_system(int n_spins);

}  // namespace spinsearch

#endif  // SPINSEARCH_RNG_HPP
