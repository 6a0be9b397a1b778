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

#include "spinsearch/demo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

namespace spinsearch {

SpinSystem four_spin_demo_system() {
  SpinSystem s = SpinSystem::make(4);
  s.shift_hz = {-577.9, 251.8, -58.9, -233.1};
  s.set_dipolar(0, 1, -101.6);
  s.set_dipolar(0, 2, 283.6);
  s.set_dipolar(0, 3, 106.9);
  s.set_dipolar(1, 2, 326.9);
  s.set_dipolar(1, 3, 95.1);
  s.set_dipolar(2, 3, 10.6);
  s.set_scalar(0, 1, 9.5);
  s.set_scalar(0, 2, 2.1);
  s.set_scalar(0, 3, 3.6);
  s.set_scalar(1, 2, 11.0);
  s.set_scalar(1, 3, 9.0);
  s.set_scalar(2, 3, 9.9);
  return s;
}

namespace {

// The demonstration labeling is shaped around the M blocks {1, 4, 6, 4, 1}:
//
//   000 <- the top (M = +2) level and its strongest line into M = +1
//   001, 010, 100 <- the remaining M = +1 levels, matched into M = 0
//   011 <- an M = -1 level matched with the bottom (M = -2) level
//   101, 110 <- two of the remaining M = 0 levels, matched into M = -1
//   111 <- the leftover (M = 0, M = -1) pair, whose line is unobserved
//
// Putting the 011 pair low in the diagram makes the first initial state mix
// population differences of one and two units, and the unobserved leftover
// line makes the all-ones state unsearchable.

struct Skeleton {
  std::array<int, 16> level_of_code;
};

const Transition* observed_between(const TransitionTable& table, int a, int b) {
  const Transition* t = table.between(a, b);
  return (t != nullptr && t->observed) ? t : nullptr;
}

std::optional<Skeleton> build_skeleton(const EigenSystem& eig, const TransitionTable& table) {
  std::array<std::vector<int>, 5> block_states;  // beta count 0..4
  for (int s = 0; s < eig.dim; ++s) {
    block_states[static_cast<std::size_t>(eig.block[static_cast<std::size_t>(s)])].push_back(s);
  }
  const int top = block_states[0].front();
  const int bottom = block_states[4].front();
  const auto& m1 = block_states[1];
  const auto& m0 = block_states[2];
  const auto& mm1 = block_states[3];

  // pair 000: strongest observed line out of the top level
  const Transition* t000 = nullptr;
  for (int a : m1) {
    const Transition* t = observed_between(table, top, a);
    if (t != nullptr && (t000 == nullptr || t->intensity > t000->intensity)) t000 = t;
  }
  if (t000 == nullptr) return std::nullopt;
  const int a000 = t000->upper_state;

  std::vector<int> rest_m1;
  for (int a : m1) {
    if (a != a000) rest_m1.push_back(a);
  }

  // pairs 001, 010, 100: disjoint observed lines from the remaining M = +1
  // levels into M = 0, maximizing total intensity
  std::array<int, 3> best_m0{-1, -1, -1};
  double best_score = -1.0;
  std::array<int, 3> pick{};
  for (pick[0] = 0; pick[0] < static_cast<int>(m0.size()); ++pick[0]) {
    for (pick[1] = 0; pick[1] < static_cast<int>(m0.size()); ++pick[1]) {
      if (pick[1] == pick[0]) continue;
      for (pick[2] = 0; pick[2] < static_cast<int>(m0.size()); ++pick[2]) {
        if (pick[2] == pick[0] || pick[2] == pick[1]) continue;
        double score = 0.0;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
          const Transition* t = observed_between(
              table, rest_m1[static_cast<std::size_t>(i)],
              m0[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])]);
          if (t == nullptr) {
            ok = false;
          } else {
            score += t->intensity;
          }
        }
        if (ok && score > best_score) {
          best_score = score;
          for (int i = 0; i < 3; ++i) {
            best_m0[static_cast<std::size_t>(i)] =
                m0[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
          }
        }
      }
    }
  }
  if (best_score < 0.0) return std::nullopt;

  // pair 011: strongest observed line into the bottom level
  const Transition* t011 = nullptr;
  for (int c : mm1) {
    const Transition* t = observed_between(table, c, bottom);
    if (t != nullptr && (t011 == nullptr || t->intensity > t011->intensity)) t011 = t;
  }
  if (t011 == nullptr) return std::nullopt;
  const int c011 = t011->lower_state;

  std::vector<int> rem_m0;
  for (int e : m0) {
    if (std::find(best_m0.begin(), best_m0.end(), e) == best_m0.end()) rem_m0.push_back(e);
  }
  std::vector<int> rem_mm1;
  for (int f : mm1) {
    if (f != c011) rem_mm1.push_back(f);
  }

  // pairs 101 and 110 from the remaining (M = 0) x (M = -1) levels; the
  // leftover pair must be unobserved so that 111 stays unsearchable
  double best_min = -1.0;
  std::array<int, 2> e_pick{-1, -1};
  std::array<int, 2> f_pick{-1, -1};
  int leftover_e = -1;
  int leftover_f = -1;
  for (std::size_t e0 = 0; e0 < rem_m0.size(); ++e0) {
    for (std::size_t e1 = 0; e1 < rem_m0.size(); ++e1) {
      if (e1 == e0) continue;
      const std::size_t e2 = 3 - e0 - e1;
      for (std::size_t f0 = 0; f0 < rem_mm1.size(); ++f0) {
        for (std::size_t f1 = 0; f1 < rem_mm1.size(); ++f1) {
          if (f1 == f0) continue;
          const std::size_t f2 = 3 - f0 - f1;
          const Transition* t101 = observed_between(table, rem_m0[e0], rem_mm1[f0]);
          const Transition* t110 = observed_between(table, rem_m0[e1], rem_mm1[f1]);
          if (t101 == nullptr || t110 == nullptr) continue;
          if (observed_between(table, rem_m0[e2], rem_mm1[f2]) != nullptr) continue;
          const double score = std::min(t101->intensity, t110->intensity);
          if (score > best_min) {
            best_min = score;
            e_pick = {rem_m0[e0], rem_m0[e1]};
            f_pick = {rem_mm1[f0], rem_mm1[f1]};
            leftover_e = rem_m0[e2];
            leftover_f = rem_mm1[f2];
          }
        }
      }
    }
  }
  if (best_min < 0.0) return std::nullopt;

  Skeleton sk{};
  auto put = [&](std::uint32_t code, int level) {
    sk.level_of_code[code] = level;
  };
  put(0b0000, top);
  put(0b1000, a000);
  for (int i = 0; i < 3; ++i) {
    const std::uint32_t w = i == 0 ? 0b0001u : (i == 1 ? 0b0010u : 0b0100u);
    put(w, rest_m1[static_cast<std::size_t>(i)]);
    put(w | 0b1000u, best_m0[static_cast<std::size_t>(i)]);
  }
  put(0b0011, c011);
  put(0b1011, bottom);
  put(0b0101, e_pick[0]);
  put(0b1101, f_pick[0]);
  put(0b0110, e_pick[1]);
  put(0b1110, f_pick[1]);
  put(0b0111, leftover_e);
  put(0b1111, leftover_f);
  return sk;
}

}  // namespace

LabeledInstance four_spin_demo() {
  const SpinSystem system = four_spin_demo_system();
  LabeledInstance inst;
  inst.system = system;
  inst.eig = diagonalize(build_hamiltonian(system));
  inst.table = compute_transitions(inst.eig, system);

  const auto skeleton = build_skeleton(inst.eig, inst.table);
  if (!skeleton) {
    throw Error("demo labeling construction failed; fixed parameters no longer fit");
  }
  std::vector<std::uint32_t> codes(16);
  for (std::uint32_t c = 0; c < 16; ++c) {
    codes[static_cast<std::size_t>(skeleton->level_of_code[c])] = c;
  }
  inst.labeling = labeling_from_codes(codes, inst.table);
  return inst;
}

}  // namespace spinsearch
