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
#include <set>

#include "spinsearch/basis.hpp"
#include "spinsearch/demo.hpp"
#include "spinsearch/instance.hpp"
#include "spinsearch/labeling.hpp"
#include "spinsearch/rng.hpp"
#include "test_helpers.hpp"

using namespace spinsearch;
using spinsearch::testing::EdgeSpec;
using spinsearch::testing::make_table;

namespace {

// Transition ids of the ancilla spin's lines under the weak-coupling
// convention: dominant product states of the two levels differ in spin 0.
std::vector<int> ancilla_spin_lines(const EigenSystem& eig, const TransitionTable& table) {
  const Labeling conventional = conventional_labeling(eig, table);
  std::vector<int> ids;
  for (const auto& t : table.transitions) {
    if (!t.observed) continue;
    const std::uint32_t a = conventional.code[static_cast<std::size_t>(t.lower_state)];
    const std::uint32_t b = conventional.code[static_cast<std::size_t>(t.upper_state)];
    if ((a ^ b) == (1u << conventional.n_work)) ids.push_back(t.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

LabeledInstance analyzed_strong(int n, std::uint64_t seed) {
  return analyze(random_strong_system(n, seed));
}

}  // namespace

TEST_SUITE("labeler") {

TEST_CASE("weakly coupled pair: the two ancilla lines form a perfect matching") {
  const SpinSystem s = weak_reference_system(2);
  const auto eig = diagonalize(build_hamiltonian(s));
  const auto table = compute_transitions(eig, s);

  const auto matchings = find_ancilla_matchings(table);
  REQUIRE(!matchings.empty());
  CHECK(matchings.front().size() == 2);

  // every level is covered
  std::set<int> covered;
  for (int tid : matchings.front()) {
    covered.insert(table.at(tid).lower_state);
    covered.insert(table.at(tid).upper_state);
  }
  CHECK(covered.size() == 4);

  // and the selected matching is the ancilla spin's pair of lines
  CHECK(matchings.front() == ancilla_spin_lines(eig, table));
}

TEST_CASE("sixteen levels with one isolated state: maximum matching is seven") {
  // skeleton of seven disjoint observed lines; level 10 has no observed line
  // at all, so no matching can reach size eight
  std::vector<EdgeSpec> edges = {
      {0, 1}, {2, 5}, {3, 6}, {4, 7}, {11, 15}, {8, 12}, {9, 13},
      // extra observed lines sharing levels with the skeleton
      {0, 2}, {0, 3}, {1, 5}, {2, 6}, {5, 11}, {6, 12}, {7, 14}, {8, 14},
      // the would-be eighth pair exists only as an unobserved line
      {10, 14, 0.001, false},
  };
  const auto table = make_table(spinsearch::testing::four_spin_mz(), edges);

  CHECK(maximum_matching_size(table) == 7);
  const auto matchings = find_ancilla_matchings(table);
  for (const auto& m : matchings) {
    CHECK(m.size() == 7);
    std::set<int> endpoints;
    for (int tid : m) {
      endpoints.insert(table.at(tid).lower_state);
      endpoints.insert(table.at(tid).upper_state);
    }
    CHECK(endpoints.size() == 14);  // pairwise disjoint, two levels unmatched
    CHECK(endpoints.count(10) == 0);
  }

  SUBCASE("assignment reroutes the isolated pair to the free label") {
    const auto labeling =
        assign_labels(matchings.front(), table, LabelingConstraints::defaults(3));
    REQUIRE(labeling.missing_pairs.size() == 1);
    CHECK(labeling.missing_pairs.front() == 0b111);
    CHECK(labeling.level_of(0, 0b111) == 10);
    const auto report = validate_labeling(labeling, table);
    CHECK(report.ok());
    CHECK(report.unsearchable == std::vector<std::uint32_t>{0b111});
  }

  SUBCASE("requiring every state rejects the isolated level") {
    LabelingConstraints all;
    for (std::uint32_t w = 0; w < 8; ++w) all.required_states.push_back(w);
    CHECK_THROWS_AS(assign_labels(matchings.front(), table, all), ConstraintViolation);
  }
}

TEST_CASE("single observed transition yields a size-one matching") {
  const auto table = make_table({1.0, 0.0, 0.0, -1.0}, {{0, 1}});
  const auto matchings = find_ancilla_matchings(table);
  REQUIRE(matchings.size() == 1);
  CHECK(matchings.front() == std::vector<int>{0});
}

TEST_CASE("no observed transition raises NoMatching") {
  const auto table = make_table({1.0, 0.0, 0.0, -1.0}, {{0, 1, 0.001, false}});
  CHECK_THROWS_AS(find_ancilla_matchings(table), NoMatching);
}

TEST_CASE("fully connected graphs always label successfully") {
  // every ancilla-0 level keeps observed lines, so the reachability
  // constraint is vacuous
  for (std::uint64_t seed : {3u, 5u, 9u}) {
    const auto inst = analyzed_strong(3, seed);
    const auto report = validate_labeling(inst.labeling, inst.table);
    CHECK(report.ok());
  }
}

TEST_CASE("labels of matched pairs differ exactly in the ancilla bit") {
  for (std::uint64_t seed : {13u, 14u}) {
    const auto inst = analyzed_strong(3, seed);
    const auto& lab = inst.labeling;
    for (std::uint32_t w = 0; w < (1u << lab.n_work); ++w) {
      const int tid = lab.ancilla_transition[w];
      if (tid < 0) continue;
      const auto& t = inst.table.at(tid);
      const std::uint32_t a = lab.code[static_cast<std::size_t>(t.lower_state)];
      const std::uint32_t b = lab.code[static_cast<std::size_t>(t.upper_state)];
      CHECK((a ^ b) == (1u << lab.n_work));
      CHECK((a & ~(1u << lab.n_work)) == w);
    }
  }
}

TEST_CASE("matching endpoints are all distinct (random instances)") {
  for (std::uint64_t seed = 50; seed < 58; ++seed) {
    const SpinSystem s = random_strong_system(3, seed);
    const auto eig = diagonalize(build_hamiltonian(s));
    const auto table = compute_transitions(eig, s);
    const auto matchings = find_ancilla_matchings(table, 50);
    for (const auto& m : matchings) {
      std::set<int> endpoints;
      for (int tid : m) {
        endpoints.insert(table.at(tid).lower_state);
        endpoints.insert(table.at(tid).upper_state);
      }
      CHECK(endpoints.size() == 2 * m.size());
    }
  }
}

TEST_CASE("labeling is deterministic across runs") {
  const auto a = analyzed_strong(4, 71);
  const auto b = analyzed_strong(4, 71);
  CHECK(a.labeling.code == b.labeling.code);
  CHECK(a.labeling.ancilla_transition == b.labeling.ancilla_transition);
}

TEST_CASE("weak systems: the matching is the ancilla spin's line set") {
  for (int n_work : {1, 2, 3}) {
    const SpinSystem s = weak_reference_system(n_work + 1);
    const auto inst = analyze(s);
    const auto expected = ancilla_spin_lines(inst.eig, inst.table);
    CHECK(inst.labeling.ancilla_matching() == expected);
    CHECK(static_cast<int>(expected.size()) == (1 << n_work));
  }
}

TEST_CASE("validate_labeling flags doctored defects") {
  const SpinSystem s = weak_reference_system(2);
  const auto eig = diagonalize(build_hamiltonian(s));
  const auto table = compute_transitions(eig, s);
  const auto inst = analyze(s);

  SUBCASE("intact labeling passes") {
    CHECK(validate_labeling(inst.labeling, table).ok());
  }
  SUBCASE("two matched transitions sharing a level") {
    Labeling broken = inst.labeling;
    // point both work labels at transitions that share an eigenstate
    const auto& adj = table.adjacency[static_cast<std::size_t>(broken.ancilla_transition[0])];
    REQUIRE(!adj.empty());
    broken.ancilla_transition[1] = adj.front();
    const auto report = validate_labeling(broken, table);
    CHECK(!report.ok());
  }
  SUBCASE("non-bijective codes") {
    Labeling broken = inst.labeling;
    broken.code[0] = broken.code[1];
    CHECK(!validate_labeling(broken, table).ok());
  }
}

TEST_CASE("demonstration instance has the seven-line shape") {
  const auto inst = four_spin_demo();
  const auto& lab = inst.labeling;
  CHECK(lab.n_work == 3);
  CHECK(lab.ancilla_matching().size() == 7);
  REQUIRE(lab.missing_pairs.size() == 1);
  CHECK(lab.missing_pairs.front() == 0b111);

  const auto report = validate_labeling(lab, inst.table);
  CHECK(report.ok());
  CHECK(report.unsearchable == std::vector<std::uint32_t>{0b111});

  // the shape that makes the first preparation mix one- and two-unit
  // population differences
  CHECK(inst.table.level_mz[static_cast<std::size_t>(lab.level_of(0, 0b000))] == 2.0);
  CHECK(inst.table.level_mz[static_cast<std::size_t>(lab.level_of(0, 0b001))] == 1.0);
  CHECK(inst.table.level_mz[static_cast<std::size_t>(lab.level_of(0, 0b010))] == 1.0);
  CHECK(inst.table.level_mz[static_cast<std::size_t>(lab.level_of(0, 0b100))] == 1.0);
  CHECK(inst.table.level_mz[static_cast<std::size_t>(lab.level_of(0, 0b011))] == -1.0);
  CHECK(inst.table.level_mz[static_cast<std::size_t>(lab.level_of(1, 0b011))] == -2.0);
}

TEST_CASE("enumeration honors its cap") {
  const SpinSystem s = random_strong_system(4, 19);
  const auto eig = diagonalize(build_hamiltonian(s));
  const auto table = compute_transitions(eig, s);
  const auto few = find_ancilla_matchings(table, 5);
  CHECK(few.size() == 5);
  // lexicographic enumeration: the first matching is lexicographically least
  const auto more = find_ancilla_matchings(table, 50);
  CHECK(more.front() == few.front());
  CHECK(std::is_sorted(more.begin(), more.end()));
}

}  // TEST_SUITE
