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

#include "spinsearch/transitions.hpp"

#include <algorithm>
#include <cmath>

#include "spinsearch/basis.hpp"

namespace spinsearch {

const Transition& TransitionTable::at(int id) const {
  if (id < 0 || id >= static_cast<int>(transitions.size())) {
    throw UnknownTransition("transition id " + std::to_string(id) + " out of range");
  }
  return transitions[static_cast<std::size_t>(id)];
}

const Transition* TransitionTable::between(int level_a, int level_b) const {
  for (const auto& t : transitions) {
    if ((t.lower_state == level_a && t.upper_state == level_b) ||
        (t.lower_state == level_b && t.upper_state == level_a)) {
      return &t;
    }
  }
  return nullptr;
}

int TransitionTable::observed_degree(int level) const {
  int deg = 0;
  for (const auto& t : transitions) {
    if (t.observed && (t.lower_state == level || t.upper_state == level)) ++deg;
  }
  return deg;
}

std::vector<int> TransitionTable::observed_ids() const {
  std::vector<int> ids;
  for (const auto& t : transitions) {
    if (t.observed) ids.push_back(t.id);
  }
  return ids;
}

std::vector<std::vector<std::pair<int, int>>> TransitionTable::level_adjacency() const {
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(dim));
  for (const auto& t : transitions) {
    if (!t.observed) continue;
    adj[static_cast<std::size_t>(t.lower_state)].emplace_back(t.upper_state, t.id);
    adj[static_cast<std::size_t>(t.upper_state)].emplace_back(t.lower_state, t.id);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
  }
  return adj;
}

void TransitionTable::rebuild_adjacency() {
  adjacency.assign(transitions.size(), {});
  for (const auto& a : transitions) {
    if (!a.observed) continue;
    for (const auto& b : transitions) {
      if (!b.observed || a.id == b.id) continue;
      const bool share = a.lower_state == b.lower_state || a.lower_state == b.upper_state ||
                         a.upper_state == b.lower_state || a.upper_state == b.upper_state;
      if (share) adjacency[static_cast<std::size_t>(a.id)].push_back(b.id);
    }
  }
}

TransitionTable compute_transitions(const EigenSystem& eig, const SpinSystem& system) {
  const int n = eig.n_spins;
  const int dim = eig.dim;
  const auto blocks = block_basis(n);

  TransitionTable table;
  table.dim = dim;
  table.level_mz = eig.mz;
  table.level_energy = eig.energies;

  // states grouped by block, in canonical state order
  std::vector<std::vector<int>> states(static_cast<std::size_t>(n) + 1);
  for (int s = 0; s < dim; ++s) {
    states[static_cast<std::size_t>(eig.block[static_cast<std::size_t>(s)])].push_back(s);
  }

  for (int k = 0; k + 1 <= n; ++k) {
    // lower_state in block k (M high), upper_state in block k+1
    for (int hi : states[static_cast<std::size_t>(k)]) {
      for (int lo : states[static_cast<std::size_t>(k) + 1]) {
        // <hi| F+ |lo> with F+ = sum_i I_i^+ (beta -> alpha)
        double amp = 0.0;
        for (int z : blocks[static_cast<std::size_t>(k) + 1]) {
          const double c = eig.vectors(z, lo);
          if (c == 0.0) continue;
          for (int i = 0; i < n; ++i) {
            if (spin_bit(static_cast<std::uint32_t>(z), i, n) == 1) {
              amp += c * eig.vectors(static_cast<Eigen::Index>(
                                         flip_spin(static_cast<std::uint32_t>(z), i, n)),
                                     hi);
            }
          }
        }
        Transition t;
        t.lower_state = hi;
        t.upper_state = lo;
        t.frequency_hz = eig.energies[static_cast<std::size_t>(hi)] -
                         eig.energies[static_cast<std::size_t>(lo)];
        t.intensity = amp * amp;
        table.transitions.push_back(t);
      }
    }
  }

  std::sort(table.transitions.begin(), table.transitions.end(),
            [](const Transition& a, const Transition& b) {
              if (a.frequency_hz != b.frequency_hz) return a.frequency_hz > b.frequency_hz;
              if (a.lower_state != b.lower_state) return a.lower_state < b.lower_state;
              return a.upper_state < b.upper_state;
            });

  double max_intensity = 0.0;
  for (const auto& t : table.transitions) max_intensity = std::max(max_intensity, t.intensity);
  const double cutoff = system.intensity_threshold * max_intensity;
  for (std::size_t i = 0; i < table.transitions.size(); ++i) {
    table.transitions[i].id = static_cast<int>(i);
    table.transitions[i].observed = table.transitions[i].intensity >= cutoff;
  }

  table.rebuild_adjacency();
  return table;
}

}  // namespace spinsearch
