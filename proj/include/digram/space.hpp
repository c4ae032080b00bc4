// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIGRAM_SPACE_HPP_
#define DIGRAM_SPACE_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "digram/bigint.hpp"
#include "digram/instruction.hpp"
#include "digram/subsets.hpp"
#include "digram/table.hpp"

namespace digram {

// Exact per-level node counts L_1..L_depth of a search tree.
struct LevelCounts {
  std::vector<BigInt> levels;

  BigInt total() const;
  // Cumulative node count through level `depth` (1-based).
  BigInt total_through(std::size_t depth) const;
  double total_log10() const;
};

enum class SpaceModel { Tree, ReachableSet };

struct SpaceModelConfig {
  int depth_max = 10;
  SpaceModel model = SpaceModel::Tree;
  std::uint64_t threshold = 1;  // recorded provenance of the allowed set
  // export_report omits total_exact above this many decimal digits.
  int exact_digit_cap = 60;
  // How many levels past depth_max the constrained recurrence is extended
  // when measuring depth gain; 0 means depth_max.
  int gain_probe_extra = 0;
};

// Unconstrained branching: L_d = n^d.
LevelCounts all_instructions_size(std::size_t vocab_size, int depth);

// Subset-only branching: L_d = s^d.
LevelCounts subset_only_size(std::size_t subset_size, int depth);

// Digram-gated search tree over one subset. Only digrams with both ends in
// the subset apply. Tree model (default): level 1 holds every member once;
// a node labeled F2 appears under a parent F1 iff (F1,F2) is allowed, so
// per-member path counts follow c_{d+1}[j] = sum over allowed (i,j) of
// c_d[i]. The reachable-set variant reads "present on a previous level"
// literally and counts only distinct reachable members per level.
LevelCounts digram_constrained_size(const std::set<InstructionId>& members,
                                    const AllowedDigrams& allowed, int depth,
                                    SpaceModel model = SpaceModel::Tree);

// Independent verification oracle: materializes the gated tree node by node
// (children of a node labeled F1 are every allowed F2) and counts what it
// built. Refuses instances whose node count would exceed the budget.
std::optional<LevelCounts> tree_enumeration_oracle(
    const std::set<InstructionId>& members, const AllowedDigrams& allowed,
    int depth, std::uint64_t node_budget = 1000000);

// Cumulative totals and derived comparisons for one subset, indexed by
// depth-1 for depths 1..depth_max.
struct SubsetSpace {
  int subset_id = 0;
  std::size_t subset_size = 0;
  bool oversized = false;
  std::vector<BigInt> all_total;
  std::vector<BigInt> subset_total;
  std::vector<BigInt> digram_total;
  // log10(subset_total / digram_total) per depth.
  std::vector<double> reduction_log10;
  // Extra levels the gated tree can descend within the budget the
  // subset-only tree spends at this depth (capped by the probe range).
  std::vector<int> depth_gain;
};

struct SpaceReport {
  SpaceModelConfig config;
  std::size_t vocab_size = 0;
  std::vector<SubsetSpace> subsets;
};

SpaceReport compare(const std::vector<InstructionSubset>& subsets,
                    const AllowedDigrams& allowed, std::size_t vocab_size,
                    const SpaceModelConfig& config);

// CSV rows `subset_id,subset_size,depth,regime,total_log10,total_exact`
// sorted by subset_id, depth, then regime (all, subset, digram).
void export_report(const SpaceReport& report, const std::string& path);

}  // namespace digram

#endif  // DIGRAM_SPACE_HPP_
