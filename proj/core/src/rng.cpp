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

#include "spinsearch/rng.hpp"

namespace spinsearch {

double Rng::uniform(double lo, double hi) {
  // 53 high bits -> [0, 1) with full double resolution
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

SpinSystem random_strong_system(int n_spins, std::uint64_t seed) {
  Rng rng(seed);
  SpinSystem s = SpinSystem::make(n_spins);
  for (int i = 0; i < n_spins; ++i) {
    s.shift_hz[static_cast<std::size_t>(i)] = rng.uniform(-400.0, 400.0);
  }
  for (int i = 0; i < n_spins; ++i) {
    for (int j = i + 1; j < n_spins; ++j) {
      s.set_dipolar(i, j, rng.uniform(-250.0, 250.0));
      s.set_scalar(i, j, rng.uniform(0.0, 15.0));
    }
  }
  return s;
}

SpinSystem weak_reference_system(int n_spins) {
  SpinSystem s = SpinSystem::make(n_spins);
  for (int i = 0; i < n_spins; ++i) {
    s.shift_hz[static_cast<std::size_t>(i)] = 1000.0 * (n_spins - i);
  }
  for (int i = 0; i < n_spins; ++i) {
    for (int j = i + 1; j < n_spins; ++j) {
      s.set_scalar(i, j, 8.0 + i + 2 * j);
    }
  }
  return s;
}

}  // namespace spinsearch
