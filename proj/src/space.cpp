// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#include "digram/space.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "digram/errors.hpp"

namespace digram {

BigInt LevelCounts::total() const {
  BigInt sum = 0;
  for (const BigInt& level : levels) sum += level;
  return sum;
}

BigInt LevelCounts::total_through(std::size_t depth) const {
  DIGRAM_CHECK(depth >= 1 && depth <= levels.size());
  BigInt sum = 0;
  for (std::size_t d = 0; d < depth; ++d) sum += levels[d];
  return sum;
}

double LevelCounts::total_log10() const { return log10_approx(total()); }

LevelCounts all_instructions_size(std::size_t vocab_size, int depth) {
  DIGRAM_CHECK(vocab_size >= 1);
  DIGRAM_CHECK(depth >= 1);
  LevelCounts counts;
  BigInt level = 1;
  for (int d = 0; d < depth; ++d) {
    level *= vocab_size;
    counts.levels.push_back(level);
  }
  return counts;
}

LevelCounts subset_only_size(std::size_t subset_size, int depth) {
  return all_instructions_size(subset_size, depth);
}

namespace {

// Adjacency restricted to the subset: in_edges[j] lists the member indices i
// with (i, j) allowed.
std::vector<std::vector<std::size_t>> restricted_in_edges(
    const std::vector<InstructionId>& members, const AllowedDigrams& allowed) {
  std::vector<std::vector<std::size_t>> in_edges(members.size());
  for (std::size_t j = 0; j < members.size(); ++j) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (allowed.contains(members[i], members[j])) {
        in_edges[j].push_back(i);
      }
    }
  }
  return in_edges;
}

}  // namespace

LevelCounts digram_constrained_size(const std::set<InstructionId>& members,
                                    const AllowedDigrams& allowed, int depth,
                                    SpaceModel model) {
  DIGRAM_CHECK(!members.empty());
  DIGRAM_CHECK(depth >= 1);
  const std::vector<InstructionId> member_list(members.begin(), members.end());
  const std::size_t n = member_list.size();

  LevelCounts counts;
  if (model == SpaceModel::Tree) {
    const auto in_edges = restricted_in_edges(member_list, allowed);
    std::vector<BigInt> current(n, 1);
    for (int d = 1; d <= depth; ++d) {
      BigInt level = 0;
      for (const BigInt& c : current) level += c;
      counts.levels.push_back(level);
      if (d == depth) break;
      std::vector<BigInt> next(n, 0);
      for (std::size_t j = 0; j < n; ++j) {
        for (const std::size_t i : in_edges[j]) {
          next[j] += current[i];
        }
      }
      current = std::move(next);
    }
    return counts;
  }

  // Reachable-set variant: membership, not path counts. Level 1 holds the
  // whole subset; a member appears on a later level iff some member present
  // on any earlier level has an allowed digram into it.
  std::vector<bool> seen(n, true);  // union of A_1..A_d; A_1 = S
  std::vector<bool> current(n, true);
  const auto in_edges = restricted_in_edges(member_list, allowed);
  for (int d = 1; d <= depth; ++d) {
    std::size_t size = 0;
    for (const bool present : current) size += present ? 1 : 0;
    counts.levels.push_back(BigInt(size));
    if (d == depth) break;
    std::vector<bool> next(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      for (const std::size_t i : in_edges[j]) {
        if (seen[i]) {
          next[j] = true;
          break;
        }
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (next[j]) seen[j] = true;
    }
    current = std::move(next);
  }
  return counts;
}

std::optional<LevelCounts> tree_enumeration_oracle(
    const std::set<InstructionId>& members, const AllowedDigrams& allowed,
    int depth, std::uint64_t node_budget) {
  DIGRAM_CHECK(!members.empty());
  DIGRAM_CHECK(depth >= 1);
  const std::vector<InstructionId> member_list(members.begin(), members.end());
  const std::size_t n = member_list.size();

  std::vector<std::vector<std::size_t>> successors(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (allowed.contains(member_list[i], member_list[j])) {
        successors[i].push_back(j);
      }
    }
  }

  // One entry per materialized node, holding its member label.
  std::vector<std::size_t> level_nodes(n);
  for (std::size_t i = 0; i < n; ++i) level_nodes[i] = i;

  LevelCounts counts;
  std::uint64_t built = 0;
  for (int d = 1; d <= depth; ++d) {
    built += level_nodes.size();
    if (built > node_budget) return std::nullopt;
    counts.levels.push_back(BigInt(level_nodes.size()));
    if (d == depth) break;
    std::vector<std::size_t> next_nodes;
    for (const std::size_t label : level_nodes) {
      for (const std::size_t child : successors[label]) {
        next_nodes.push_back(child);
        if (built + next_nodes.size() > node_budget) return std::nullopt;
      }
    }
    level_nodes = std::move(next_nodes);
  }
  return counts;
}

SpaceReport compare(const std::vector<InstructionSubset>& subsets,
                    const AllowedDigrams& allowed, std::size_t vocab_size,
                    const SpaceModelConfig& config) {
  DIGRAM_CHECK(config.depth_max >= 1);
  const int probe =
      config.gain_probe_extra > 0 ? config.gain_probe_extra : config.depth_max;

  SpaceReport report;
  report.config = config;
  report.vocab_size = vocab_size;

  const LevelCounts all_levels = all_instructions_size(
      std::max<std::size_t>(vocab_size, 1), config.depth_max);

  for (const InstructionSubset& subset : subsets) {
    if (subset.members.empty()) continue;
    SubsetSpace row;
    row.subset_id = subset.subset_id;
    row.subset_size = subset.members.size();
    row.oversized = subset.oversized;

    const LevelCounts subset_levels =
        subset_only_size(row.subset_size, config.depth_max);
    const LevelCounts digram_levels = digram_constrained_size(
        subset.members, allowed, config.depth_max + probe, config.model);

    std::vector<BigInt> digram_cumulative(
        static_cast<std::size_t>(config.depth_max + probe));
    BigInt running = 0;
    for (std::size_t d = 0; d < digram_cumulative.size(); ++d) {
      running += digram_levels.levels[d];
      digram_cumulative[d] = running;
    }

    for (int depth = 1; depth <= config.depth_max; ++depth) {
      const std::size_t i = static_cast<std::size_t>(depth);
      row.all_total.push_back(all_levels.total_through(i));
      row.subset_total.push_back(subset_levels.total_through(i));
      row.digram_total.push_back(digram_cumulative[i - 1]);

      row.reduction_log10.push_back(log10_approx(row.subset_total.back()) -
                                    log10_approx(row.digram_total.back()));

      // Largest k with the gated cumulative total at depth+k still within
      // the subset-only budget at this depth. Cumulative totals are
      // nondecreasing, so a forward scan suffices.
      int gain = 0;
      const BigInt& budget = row.subset_total.back();
      while (gain < probe &&
             digram_cumulative[i + static_cast<std::size_t>(gain)] <= budget) {
        ++gain;
      }
      row.depth_gain.push_back(gain);
    }
    report.subsets.push_back(std::move(row));
  }

  std::sort(report.subsets.begin(), report.subsets.end(),
            [](const SubsetSpace& a, const SubsetSpace& b) {
              return a.subset_id < b.subset_id;
            });
  return report;
}

namespace {

std::string format_log10(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

void write_row(std::ofstream& out, int subset_id, std::size_t subset_size,
               int depth, const char* regime, const BigInt& total,
               int digit_cap) {
  const std::string exact = to_decimal(total);
  out << subset_id << ',' << subset_size << ',' << depth << ',' << regime
      << ',' << format_log10(log10_approx(total)) << ','
      << (static_cast<int>(exact.size()) <= digit_cap ? exact : "") << '\n';
}

}  // namespace

void export_report(const SpaceReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write report file: " + path);
  out << "subset_id,subset_size,depth,regime,total_log10,total_exact\n";
  for (const SubsetSpace& row : report.subsets) {
    for (int depth = 1; depth <= report.config.depth_max; ++depth) {
      const std::size_t i = static_cast<std::size_t>(depth) - 1;
      write_row(out, row.subset_id, row.subset_size, depth, "all",
                row.all_total[i], report.config.exact_digit_cap);
      write_row(out, row.subset_id, row.subset_size, depth, "subset",
                row.subset_total[i], report.config.exact_digit_cap);
      write_row(out, row.subset_id, row.subset_size, depth, "digram",
                row.digram_total[i], report.config.exact_digit_cap);
    }
  }
  if (!out) throw InputError("write failed: " + path);
}

}  // namespace digram
