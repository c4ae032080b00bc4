// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIGRAM_SUBSETS_HPP_
#define DIGRAM_SUBSETS_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "digram/instruction.hpp"
#include "digram/table.hpp"

namespace digram {

// The distinct instructions of one human-written code unit: a top-level
// function body, or the file-level remainder for code outside functions.
struct ProgramUnit {
  std::string unit_id;  // "<path>::<function>" or "<path>"
  std::set<InstructionId> instructions;

  friend bool operator==(const ProgramUnit&, const ProgramUnit&) = default;
};

struct InstructionSubset {
  int subset_id = 0;
  std::size_t max_size = 0;
  std::set<InstructionId> members;
  bool oversized = false;  // a unit larger than the cap, kept and flagged

  friend bool operator==(const InstructionSubset&,
                         const InstructionSubset&) = default;
};

struct UnitSizeDistribution {
  std::map<std::size_t, std::size_t> histogram;  // distinct-count -> units
  double fraction_le_10 = 0.0;
  double fraction_le_20 = 0.0;
  bool degenerate = false;
};

// One unit per top-level function with at least one instruction; fragments
// outside any function pool into a single file-level unit.
std::vector<ProgramUnit> extract_units(const std::vector<FileAnalysis>& files,
                                       const LabelConfig& config = {});

// Scan + analyze + extract over a whole corpus.
std::vector<ProgramUnit> extract_units_from_corpus(
    const CorpusSpec& spec, const MiningConfig& config = {},
    ParseStats* stats = nullptr);

// Greedy agglomeration: repeatedly merge the two clusters with the highest
// Jaccard overlap whose union fits the cap, until no overlapping pair fits.
// Every unit within the cap ends up inside at least one subset; larger units
// become their own oversized subsets. Deterministic: clusters are kept in
// lexicographic member order and ties pick the first pair in that order.
std::vector<InstructionSubset> cluster_subsets(
    const std::vector<ProgramUnit>& units, std::size_t max_size);

UnitSizeDistribution unit_size_distribution(
    const std::vector<ProgramUnit>& units);

// Subsets file: header `max_size=<k>`, one subset per line as
// comma-separated names sorted within the line; oversized subsets carry a
// leading '!'. An unmarked line wider than the declared cap is an error.
void save_subsets(const std::vector<InstructionSubset>& subsets,
                  std::size_t max_size, const std::string& path);
std::vector<InstructionSubset> load_subsets(const std::string& path);

}  // namespace digram

#endif  // DIGRAM_SUBSETS_HPP_
