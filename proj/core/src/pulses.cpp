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

#include "spinsearch/pulses.hpp"

#include <algorithm>
#include <deque>
#include <optional>

namespace spinsearch {

PopulationState apply_pi(const PopulationState& state, int transition_id,
                         const TransitionTable& table) {
  const Transition& t = table.at(transition_id);
  if (!t.observed) {
    throw UnobservedTransition("selective pulse on unobserved transition " +
                               std::to_string(transition_id));
  }
  PopulationState out = state;
  std::swap(out.pop[static_cast<std::size_t>(t.lower_state)],
            out.pop[static_cast<std::size_t>(t.upper_state)]);
  return out;
}

PopulationState apply_plan(const PopulationState& state, const PulsePlan& plan,
                           const TransitionTable& table) {
  PopulationState out = state;
  for (int tid : plan.pulses) {
    const Transition& t = table.at(tid);
    if (!t.observed) {
      throw UnobservedTransition("selective pulse on unobserved transition " +
                                 std::to_string(tid));
    }
    std::swap(out.pop[static_cast<std::size_t>(t.lower_state)],
              out.pop[static_cast<std::size_t>(t.upper_state)]);
  }
  return out;
}

namespace {

// Shortest path of observed transitions, deterministic: BFS visiting each
// level's lines in transition id order.
std::optional<std::vector<int>> shortest_pulse_path(
    int from, int to, const std::vector<std::vector<std::pair<int, int>>>& adj) {
  if (from == to) return std::vector<int>{};
  std::vector<int> prev_level(adj.size(), -1);
  std::vector<int> prev_tid(adj.size(), -1);
  std::deque<int> queue{from};
  prev_level[static_cast<std::size_t>(from)] = from;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (const auto& [v, tid] : adj[static_cast<std::size_t>(u)]) {
      if (prev_level[static_cast<std::size_t>(v)] >= 0) continue;
      prev_level[static_cast<std::size_t>(v)] = u;
      prev_tid[static_cast<std::size_t>(v)] = tid;
      if (v == to) {
        std::vector<int> path;
        for (int w = to; w != from; w = prev_level[static_cast<std::size_t>(w)]) {
          path.push_back(prev_tid[static_cast<std::size_t>(w)]);
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(v);
    }
  }
  return std::nullopt;
}

PulsePlan palindrome(const std::vector<int>& path) {
  PulsePlan plan;
  plan.pulses = path;
  for (std::size_t i = path.size(); i-- > 1;) {
    plan.pulses.push_back(path[i - 1]);
  }
  return plan;
}

}  // namespace

PulsePlan compile_swap(int level_a, int level_b, const TransitionTable& table) {
  if (level_a == level_b || level_a < 0 || level_b < 0 || level_a >= table.dim ||
      level_b >= table.dim) {
    throw Unreachable("invalid level pair (" + std::to_string(level_a) + ", " +
                      std::to_string(level_b) + ")");
  }
  const auto adj = table.level_adjacency();
  const auto path = shortest_pulse_path(level_a, level_b, adj);
  if (!path) {
    throw Unreachable("no observed-transition path between levels " +
                      std::to_string(level_a) + " and " + std::to_string(level_b));
  }
  return palindrome(*path);
}

namespace {

// Perfect matchings of the support along single work-bit flips, searched in
// bit order; the predicate decides whether a candidate pair is acceptable.
template <typename Pred>
bool pair_support(const std::vector<std::uint32_t>& support, const std::vector<int>& flip_bits,
                  int n_work, const Pred& acceptable, std::size_t at,
                  std::vector<char>& paired,
                  std::vector<std::pair<std::uint32_t, std::uint32_t>>& out) {
  while (at < support.size() && paired[at]) ++at;
  if (at == support.size()) return true;
  paired[at] = 1;
  for (int b : flip_bits) {
    const std::uint32_t partner = support[at] ^ (1u << (n_work - b));
    const auto it = std::find(support.begin(), support.end(), partner);
    if (it == support.end()) continue;
    const auto j = static_cast<std::size_t>(it - support.begin());
    if (paired[j] || j <= at) continue;
    if (!acceptable(support[at], partner)) continue;
    paired[j] = 1;
    out.emplace_back(support[at], partner);
    if (pair_support(support, flip_bits, n_work, acceptable, at + 1, paired, out)) return true;
    out.pop_back();
    paired[j] = 0;
  }
  paired[at] = 0;
  return false;
}

}  // namespace

Preparation prepare_initial(int k, const Labeling& labeling, const TransitionTable& table,
                            const PopulationState& equilibrium) {
  const int n = labeling.n_work;
  if (k < 1 || k > n) {
    throw ValidationError("work qubit index k must be in [1, " + std::to_string(n) + "]");
  }

  const auto adj = table.level_adjacency();
  auto reachable = [&](int a, int b) { return shortest_pulse_path(a, b, adj).has_value(); };
  auto dm_nonzero = [&](int a, int b) {
    return table.level_mz[static_cast<std::size_t>(a)] !=
           table.level_mz[static_cast<std::size_t>(b)];
  };

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  if (n == 1) {
    pairs.emplace_back(0u, 1u);
    const int a = labeling.level_of(0, 0);
    const int b = labeling.level_of(0, 1);
    if (!reachable(a, b)) {
      throw Unpreparable("initial state 1: levels " + std::to_string(a) + " and " +
                         std::to_string(b) + " are unreachable");
    }
  } else {
    std::vector<std::uint32_t> support;
    for (std::uint32_t w = 0; w < (1u << n); ++w) {
      if (((w >> (n - k)) & 1u) == 0) support.push_back(w);
    }
    std::vector<int> flip_bits;
    for (int b = 1; b <= n; ++b) {
      if (b != k) flip_bits.push_back(b);
    }
    auto levels_ok = [&](std::uint32_t wa, std::uint32_t wb, bool need_dm) {
      const int a = labeling.level_of(0, wa);
      const int b = labeling.level_of(0, wb);
      if (need_dm && !dm_nonzero(a, b)) return false;
      return reachable(a, b);
    };
    std::vector<char> paired(support.size(), 0);
    const bool strict = pair_support(
        support, flip_bits, n,
        [&](std::uint32_t a, std::uint32_t b) { return levels_ok(a, b, true); }, 0, paired,
        pairs);
    if (!strict) {
      pairs.clear();
      std::fill(paired.begin(), paired.end(), 0);
      const bool loose = pair_support(
          support, flip_bits, n,
          [&](std::uint32_t a, std::uint32_t b) { return levels_ok(a, b, false); }, 0, paired,
          pairs);
      if (!loose) {
        throw Unpreparable("initial state " + std::to_string(k) +
                           ": no reachable pairing of the support levels");
      }
    }
  }

  Preparation prep;
  prep.pops_pairs = pairs;
  for (const auto& [wa, wb] : pairs) {
    const auto path = shortest_pulse_path(labeling.level_of(0, wa), labeling.level_of(0, wb), adj);
    const PulsePlan cascade = palindrome(*path);
    prep.plan.pulses.insert(prep.plan.pulses.end(), cascade.pulses.begin(),
                            cascade.pulses.end());
  }
  prep.rho_k = apply_plan(equilibrium, prep.plan, table);
  prep.rho_in = equilibrium - prep.rho_k;
  return prep;
}

}  // namespace spinsearch
