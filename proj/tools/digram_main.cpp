// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0
//
// digram: mine instruction digrams from a source corpus, summarize their
// frequency distribution, cluster instruction subsets, model the
// digram-constrained search space, and run the gated example synthesizer.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "digram/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"instruction digram mining and search-space toolkit"};
  app.require_subcommand(1);

  unsigned long long seed = 0;
  app.add_option("--seed", seed,
                 "seed for randomized harnesses (reserved; the pipeline "
                 "itself is deterministic)");

  digram::MineOptions mine;
  CLI::App* mine_cmd =
      app.add_subcommand("mine", "mine a corpus into a digram table");
  mine_cmd->add_option("--corpus", mine.corpus_dir, "corpus directory")
      ->required();
  mine_cmd->add_option("--out", mine.out_table, "output table file")
      ->required();
  mine_cmd->add_option("--include", mine.include_glob,
                       "filename glob (default *.py)");
  mine_cmd->add_option("--max-file-bytes", mine.max_file_bytes,
                       "skip files larger than this");

  digram::StatsOptions stats;
  CLI::App* stats_cmd =
      app.add_subcommand("stats", "frequency statistics of a digram table");
  stats_cmd->add_option("--table", stats.table, "digram table file")
      ->required();
  stats_cmd->add_option("--out", stats.out,
                        "report file (histogram CSV written alongside)");

  digram::SubsetsOptions subsets;
  CLI::App* subsets_cmd = app.add_subcommand(
      "subsets", "extract program units and cluster instruction subsets");
  subsets_cmd->add_option("--corpus", subsets.corpus_dir, "corpus directory")
      ->required();
  subsets_cmd
      ->add_option("--max-subset-size", subsets.max_subset_size,
                   "subset size cap (default 10)")
      ->check(CLI::PositiveNumber);
  subsets_cmd->add_option("--out", subsets.out, "output subsets file")
      ->required();
  subsets_cmd->add_option("--include", subsets.include_glob,
                          "filename glob (default *.py)");

  digram::ModelOptions model;
  CLI::App* model_cmd = app.add_subcommand(
      "model", "three-regime search-space sizes per subset");
  model_cmd->add_option("--table", model.table, "digram table file")
      ->required();
  model_cmd->add_option("--subsets", model.subsets, "subsets file")
      ->required();
  model_cmd->add_option("--out", model.out_csv, "output CSV")->required();
  model_cmd->add_option("--depth", model.depth, "maximum data-flow depth")
      ->check(CLI::PositiveNumber);
  model_cmd
      ->add_option("--threshold", model.threshold,
                   "minimum digram count (default 1)")
      ->check(CLI::PositiveNumber);
  std::string model_kind = "tree";
  model_cmd
      ->add_option("--model", model_kind,
                   "level recurrence: tree or reachable")
      ->check(CLI::IsMember({"tree", "reachable"}));

  digram::SynthOptions synth;
  CLI::App* synth_cmd = app.add_subcommand(
      "synth", "run tasks under COMPLETE and digram-gated enumeration");
  synth_cmd->add_option("--tasks", synth.tasks, "JSON task file")->required();
  synth_cmd->add_option("--table", synth.table,
                        "digram table for the gated regime");
  synth_cmd->add_option("--subsets", synth.subsets,
                        "restrict the DSL to instructions the subsets cover");
  synth_cmd->add_option("--out", synth.out_csv, "comparison CSV")->required();
  synth_cmd->add_option("--depth", synth.depth, "default max depth")
      ->check(CLI::PositiveNumber);
  synth_cmd
      ->add_option("--threshold", synth.threshold,
                   "minimum digram count (default 1)")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--budget", synth.budget, "candidate budget")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : digram::kExitInputError;
  }

  if (mine_cmd->parsed()) {
    return digram::run_mine(mine, std::cout, std::cerr);
  }
  if (stats_cmd->parsed()) {
    return digram::run_stats(stats, std::cout, std::cerr);
  }
  if (subsets_cmd->parsed()) {
    return digram::run_subsets(subsets, std::cout, std::cerr);
  }
  if (model_cmd->parsed()) {
    model.model = model_kind == "reachable" ? digram::SpaceModel::ReachableSet
                                            : digram::SpaceModel::Tree;
    return digram::run_model(model, std::cout, std::cerr);
  }
  if (synth_cmd->parsed()) {
    return digram::run_synth(synth, std::cout, std::cerr);
  }
  return digram::kExitInputError;
}
