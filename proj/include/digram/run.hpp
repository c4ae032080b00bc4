// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIGRAM_RUN_HPP_
#define DIGRAM_RUN_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "digram/space.hpp"

namespace digram {

// Exit-code contract shared by every subcommand: 0 success, 2 bad input,
// 3 internal invariant failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

struct MineOptions {
  std::string corpus_dir;
  std::string out_table;
  std::string include_glob = "*.py";
  std::uint64_t max_file_bytes = 2u * 1024 * 1024;
};

struct StatsOptions {
  std::string table;
  std::string out;  // empty: report to stdout, no histogram file
};

struct SubsetsOptions {
  std::string corpus_dir;
  std::size_t max_subset_size = 10;
  std::string out;
  std::string include_glob = "*.py";
};

struct ModelOptions {
  std::string table;
  std::string subsets;
  std::string out_csv;
  int depth = 10;
  std::uint64_t threshold = 1;
  SpaceModel model = SpaceModel::Tree;
};

struct SynthOptions {
  std::string tasks;
  std::string table;    // empty: gated regime reuses COMPLETE (no gate)
  std::string subsets;  // optional: restrict the DSL to the subsets' union
  std::string out_csv;
  int depth = 3;
  std::uint64_t threshold = 1;
  std::uint64_t budget = 100000;
};

// Writes the digram table + vocabulary sidecar and prints the parse
// counters. Skipped files are reported, not fatal.
int run_mine(const MineOptions& options, std::ostream& out, std::ostream& err);

// Key:value frequency report plus a histogram CSV next to `out`.
int run_stats(const StatsOptions& options, std::ostream& out,
              std::ostream& err);

// Extracts program units, clusters them under the size cap, writes the
// subsets file and prints the unit-size distribution.
int run_subsets(const SubsetsOptions& options, std::ostream& out,
                std::ostream& err);

// Three-regime search-space report for every subset.
int run_model(const ModelOptions& options, std::ostream& out,
              std::ostream& err);

// Runs every task under the COMPLETE and gated regimes and writes the
// comparison CSV `task_id,regime,expansions,found,depth`.
int run_synth(const SynthOptions& options, std::ostream& out,
              std::ostream& err);

// Path of the histogram CSV written alongside a stats report.
std::string histogram_sidecar_path(const std::string& report_path);

}  // namespace digram

#endif  // DIGRAM_RUN_HPP_
