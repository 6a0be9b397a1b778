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

#include "spinsearch/labeling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "spinsearch/basis.hpp"

namespace spinsearch {

int Labeling::level_of(int ancilla_bit, std::uint32_t work) const {
  const std::uint32_t c = (static_cast<std::uint32_t>(ancilla_bit) << n_work) | work;
  return level[c];
}

std::vector<int> Labeling::ancilla_matching() const {
  std::vector<int> ids;
  for (int t : ancilla_transition) {
    if (t >= 0) ids.push_back(t);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::string Labeling::label_string(int state) const {
  return bit_string(code[static_cast<std::size_t>(state)], total_bits());
}

LabelingConstraints LabelingConstraints::defaults(int n_work) {
  LabelingConstraints c;
  const std::uint32_t all_ones = (1u << n_work) - 1u;
  for (std::uint32_t w = 0; w < (1u << n_work); ++w) {
    if (w != all_ones) c.required_states.push_back(w);
  }
  return c;
}

// ---------------------------------------------------------------------------
// maximum matching enumeration
// ---------------------------------------------------------------------------

namespace {

struct Edge {
  int id;
  int a;
  int b;
};

// Augmenting-path maximum matching. The observed graph is bipartite (edges
// only connect adjacent M blocks), but this implementation does not rely on
// a precomputed bipartition: it runs Kuhn's algorithm on an orientation by
// block parity supplied by the caller.
int kuhn_max_matching(const std::vector<Edge>& edges, const std::vector<int>& side,
                      int n_levels) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_levels));
  for (const auto& e : edges) {
    const int left = side[static_cast<std::size_t>(e.a)] == 0 ? e.a : e.b;
    const int right = left == e.a ? e.b : e.a;
    adj[static_cast<std::size_t>(left)].push_back(right);
  }
  std::vector<int> match_of(static_cast<std::size_t>(n_levels), -1);
  std::vector<char> seen(static_cast<std::size_t>(n_levels), 0);

  auto try_augment = [&](auto&& self, int u) -> bool {
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = 1;
      if (match_of[static_cast<std::size_t>(v)] < 0 ||
          self(self, match_of[static_cast<std::size_t>(v)])) {
        match_of[static_cast<std::size_t>(v)] = u;
        return true;
      }
    }
    return false;
  };

  int size = 0;
  for (int u = 0; u < n_levels; ++u) {
    if (side[static_cast<std::size_t>(u)] != 0 || adj[static_cast<std::size_t>(u)].empty())
      continue;
    std::fill(seen.begin(), seen.end(), 0);
    if (try_augment(try_augment, u)) ++size;
  }
  return size;
}

// Transitions only connect adjacent M blocks, so coloring blocks by the
// parity of their distance from the top block 2-colors the graph.
std::vector<int> block_parity_side(const TransitionTable& table) {
  const double m_max = *std::max_element(table.level_mz.begin(), table.level_mz.end());
  std::vector<int> side(static_cast<std::size_t>(table.dim));
  for (int s = 0; s < table.dim; ++s) {
    const auto steps = std::llround(m_max - table.level_mz[static_cast<std::size_t>(s)]);
    side[static_cast<std::size_t>(s)] = static_cast<int>(steps % 2);
  }
  return side;
}

struct Enumerator {
  const std::vector<Edge>& edges;
  const std::vector<int>& side;
  int n_levels;
  int target;
  int cap;
  std::vector<std::vector<int>>& out;
  std::vector<char> used;
  std::vector<int> chosen;

  // Maximum matching still reachable from edge index i given used levels.
  int bound(std::size_t i) const {
    std::vector<Edge> rest;
    for (std::size_t j = i; j < edges.size(); ++j) {
      const auto& e = edges[j];
      if (!used[static_cast<std::size_t>(e.a)] && !used[static_cast<std::size_t>(e.b)]) {
        rest.push_back(e);
      }
    }
    return kuhn_max_matching(rest, side, n_levels);
  }

  void run(std::size_t i) {
    if (static_cast<int>(out.size()) >= cap) return;
    if (static_cast<int>(chosen.size()) == target) {
      out.push_back(chosen);
      return;
    }
    if (i >= edges.size()) return;
    if (static_cast<int>(chosen.size()) + bound(i) < target) return;

    const auto& e = edges[i];
    if (!used[static_cast<std::size_t>(e.a)] && !used[static_cast<std::size_t>(e.b)]) {
      used[static_cast<std::size_t>(e.a)] = used[static_cast<std::size_t>(e.b)] = 1;
      chosen.push_back(e.id);
      run(i + 1);
      chosen.pop_back();
      used[static_cast<std::size_t>(e.a)] = used[static_cast<std::size_t>(e.b)] = 0;
    }
    run(i + 1);
  }
};

std::vector<Edge> observed_edges(const TransitionTable& table) {
  std::vector<Edge> edges;
  for (const auto& t : table.transitions) {
    if (t.observed) edges.push_back({t.id, t.lower_state, t.upper_state});
  }
  return edges;
}

}  // namespace

int maximum_matching_size(const TransitionTable& table) {
  const auto edges = observed_edges(table);
  if (edges.empty()) return 0;
  return kuhn_max_matching(edges, block_parity_side(table), table.dim);
}

std::vector<std::vector<int>> find_ancilla_matchings(const TransitionTable& table, int cap) {
  const auto edges = observed_edges(table);
  if (edges.empty()) {
    throw NoMatching("transition table has no observed transitions");
  }
  const auto side = block_parity_side(table);
  const int target = kuhn_max_matching(edges, side, table.dim);

  std::vector<std::vector<int>> out;
  Enumerator en{edges, side, table.dim, target, cap, out,
                std::vector<char>(static_cast<std::size_t>(table.dim), 0), {}};
  en.run(0);
  return out;
}

// ---------------------------------------------------------------------------
// label assignment
// ---------------------------------------------------------------------------

Labeling assign_labels(const std::vector<int>& matching, const TransitionTable& table,
                       const LabelingConstraints& constraints) {
  const int dim = table.dim;
  int n_total = 0;
  while ((1 << n_total) < dim) ++n_total;
  if ((1 << n_total) != dim || n_total < 1) {
    throw ValidationError("table dimension must be a power of two >= 2");
  }
  const int n_work = n_total - 1;
  const std::uint32_t n_labels = 1u << n_work;
  if (static_cast<std::uint32_t>(matching.size()) > n_labels) {
    throw ValidationError("matching larger than the number of ancilla pairs");
  }

  struct Pair {
    int lo;  // takes ancilla bit 0
    int up;
    int tid;  // -1 for unmatched leftovers
  };
  std::vector<Pair> pairs;
  std::vector<char> used(static_cast<std::size_t>(dim), 0);
  std::vector<int> sorted_matching = matching;
  std::sort(sorted_matching.begin(), sorted_matching.end());
  for (int tid : sorted_matching) {
    const Transition& t = table.at(tid);
    if (!t.observed) {
      throw ValidationError("matching uses unobserved transition " + std::to_string(tid));
    }
    if (used[static_cast<std::size_t>(t.lower_state)] ||
        used[static_cast<std::size_t>(t.upper_state)]) {
      throw ValidationError("matching transitions share a level");
    }
    used[static_cast<std::size_t>(t.lower_state)] = used[static_cast<std::size_t>(t.upper_state)] = 1;
    pairs.push_back({t.lower_state, t.upper_state, tid});
  }
  std::vector<int> leftovers;
  for (int s = 0; s < dim; ++s) {
    if (!used[static_cast<std::size_t>(s)]) leftovers.push_back(s);
  }
  for (std::size_t i = 0; i + 1 < leftovers.size(); i += 2) {
    pairs.push_back({leftovers[i], leftovers[i + 1], -1});
  }

  // canonical pair order: M of the ancilla-0 level descending, then energy
  std::sort(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
    const double ma = table.level_mz[static_cast<std::size_t>(a.lo)];
    const double mb = table.level_mz[static_cast<std::size_t>(b.lo)];
    if (ma != mb) return ma > mb;
    const double ea = table.level_energy[static_cast<std::size_t>(a.lo)];
    const double eb = table.level_energy[static_cast<std::size_t>(b.lo)];
    if (ea != eb) return ea < eb;
    return a.lo < b.lo;
  });

  // label order: Hamming weight, then lexicographic
  std::vector<std::uint32_t> graded(n_labels);
  std::iota(graded.begin(), graded.end(), 0u);
  std::sort(graded.begin(), graded.end(), [](std::uint32_t a, std::uint32_t b) {
    const int wa = std::popcount(a);
    const int wb = std::popcount(b);
    if (wa != wb) return wa < wb;
    return a < b;
  });

  // pairs whose ancilla-0 level is isolated cannot host a required state
  std::vector<char> required(static_cast<std::size_t>(n_labels), 0);
  for (std::uint32_t w : constraints.required_states) {
    if (w >= n_labels) throw ValidationError("required state out of range");
    required[w] = 1;
  }
  std::vector<std::uint32_t> free_labels;
  for (std::uint32_t w = 0; w < n_labels; ++w) {
    if (!required[w]) free_labels.push_back(w);
  }
  std::sort(free_labels.rbegin(), free_labels.rend());

  std::vector<std::uint32_t> label_of_pair(pairs.size());
  std::vector<char> taken(static_cast<std::size_t>(n_labels), 0);
  std::size_t next_free = 0;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (table.observed_degree(pairs[p].lo) == 0) {
      if (next_free >= free_labels.size()) {
        throw ConstraintViolation(
            "required state would sit on isolated level " + std::to_string(pairs[p].lo) +
            "; no non-required label left");
      }
      label_of_pair[p] = free_labels[next_free++];
      taken[label_of_pair[p]] = 1;
    }
  }
  std::size_t g = 0;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (table.observed_degree(pairs[p].lo) == 0) continue;
    while (taken[graded[g]]) ++g;
    label_of_pair[p] = graded[g];
    taken[graded[g]] = 1;
  }

  Labeling lab;
  lab.n_work = n_work;
  lab.code.assign(static_cast<std::size_t>(dim), 0);
  lab.level.assign(static_cast<std::size_t>(dim), -1);
  lab.ancilla_transition.assign(static_cast<std::size_t>(n_labels), -1);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const std::uint32_t w = label_of_pair[p];
    lab.code[static_cast<std::size_t>(pairs[p].lo)] = w;
    lab.code[static_cast<std::size_t>(pairs[p].up)] = w | (1u << n_work);
    lab.ancilla_transition[w] = pairs[p].tid;
  }
  for (int s = 0; s < dim; ++s) {
    lab.level[lab.code[static_cast<std::size_t>(s)]] = s;
  }
  for (std::uint32_t w = 0; w < n_labels; ++w) {
    if (lab.ancilla_transition[w] < 0) lab.missing_pairs.push_back(w);
  }
  return lab;
}

// ---------------------------------------------------------------------------

LabelingReport validate_labeling(const Labeling& labeling, const TransitionTable& table) {
  LabelingReport report;
  const int dim = table.dim;
  auto complain = [&](const std::string& msg) { report.violations.push_back(msg); };

  if (labeling.dim() != dim) {
    complain("labeling dimension does not match the table");
    return report;
  }
  std::vector<int> seen(static_cast<std::size_t>(dim), 0);
  for (int s = 0; s < dim; ++s) {
    const std::uint32_t c = labeling.code[static_cast<std::size_t>(s)];
    if (c >= static_cast<std::uint32_t>(dim)) {
      complain("state " + std::to_string(s) + " has out-of-range label");
      return report;
    }
    ++seen[c];
  }
  for (int c = 0; c < dim; ++c) {
    if (seen[static_cast<std::size_t>(c)] != 1) {
      complain("label " + bit_string(static_cast<std::uint32_t>(c), labeling.total_bits()) +
               " used " + std::to_string(seen[static_cast<std::size_t>(c)]) + " times");
    }
  }
  if (!report.violations.empty()) return report;

  std::vector<char> used_level(static_cast<std::size_t>(dim), 0);
  const std::uint32_t n_labels = 1u << labeling.n_work;
  for (std::uint32_t w = 0; w < n_labels; ++w) {
    const int tid = labeling.ancilla_transition[w];
    const int lo = labeling.level_of(0, w);
    const int up = labeling.level_of(1, w);
    if (tid < 0) {
      report.missing_pairs.push_back(w);
      report.unsearchable.push_back(w);
      continue;
    }
    const Transition& t = table.at(tid);
    if (!t.observed) complain("ancilla transition " + std::to_string(tid) + " is unobserved");
    const bool endpoints_match = (t.lower_state == lo && t.upper_state == up) ||
                                 (t.lower_state == up && t.upper_state == lo);
    if (!endpoints_match) {
      complain("ancilla transition " + std::to_string(tid) +
               " does not connect the pair of work label " +
               bit_string(w, labeling.n_work));
    }
    if (used_level[static_cast<std::size_t>(t.lower_state)] ||
        used_level[static_cast<std::size_t>(t.upper_state)]) {
      complain("matched transitions share level " +
               std::to_string(used_level[static_cast<std::size_t>(t.lower_state)]
                                  ? t.lower_state
                                  : t.upper_state));
    }
    used_level[static_cast<std::size_t>(t.lower_state)] = 1;
    used_level[static_cast<std::size_t>(t.upper_state)] = 1;
    const double dm = table.level_mz[static_cast<std::size_t>(lo)] -
                      table.level_mz[static_cast<std::size_t>(up)];
    if (std::abs(std::abs(dm) - 1.0) > 1e-12) {
      complain("matched pair of work label " + bit_string(w, labeling.n_work) +
               " has |Delta M| = " + std::to_string(std::abs(dm)));
    }
  }
  return report;
}

Labeling labeling_from_codes(const std::vector<std::uint32_t>& codes,
                             const TransitionTable& table) {
  const int dim = table.dim;
  if (static_cast<int>(codes.size()) != dim) {
    throw ValidationError("labeling has " + std::to_string(codes.size()) +
                          " entries, table dimension is " + std::to_string(dim));
  }
  int n_total = 0;
  while ((1 << n_total) < dim) ++n_total;

  Labeling lab;
  lab.n_work = n_total - 1;
  lab.code = codes;
  lab.level.assign(static_cast<std::size_t>(dim), -1);
  for (int s = 0; s < dim; ++s) {
    const std::uint32_t c = codes[static_cast<std::size_t>(s)];
    if (c >= static_cast<std::uint32_t>(dim)) {
      throw ValidationError("label code out of range for state " + std::to_string(s));
    }
    if (lab.level[c] >= 0) {
      throw ValidationError("label " + bit_string(c, n_total) + " assigned twice");
    }
    lab.level[c] = s;
  }

  const std::uint32_t n_labels = 1u << lab.n_work;
  lab.ancilla_transition.assign(static_cast<std::size_t>(n_labels), -1);
  for (std::uint32_t w = 0; w < n_labels; ++w) {
    const Transition* t = table.between(lab.level_of(0, w), lab.level_of(1, w));
    if (t != nullptr && t->observed) {
      lab.ancilla_transition[w] = t->id;
    } else {
      lab.missing_pairs.push_back(w);
    }
  }
  return lab;
}

Labeling conventional_labeling(const EigenSystem& eig, const TransitionTable& table) {
  std::vector<std::uint32_t> codes(static_cast<std::size_t>(eig.dim));
  std::vector<char> taken(static_cast<std::size_t>(eig.dim), 0);
  for (int s = 0; s < eig.dim; ++s) {
    Eigen::Index z = 0;
    eig.vectors.col(s).cwiseAbs().maxCoeff(&z);
    if (taken[static_cast<std::size_t>(z)]) {
      throw ValidationError(
          "dominant-component labeling is not a bijection; system is not weakly coupled");
    }
    taken[static_cast<std::size_t>(z)] = 1;
    codes[static_cast<std::size_t>(s)] = static_cast<std::uint32_t>(z);
  }
  return labeling_from_codes(codes, table);
}

}  // namespace spinsearch
