// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#include "digram/run.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "digram/dsl.hpp"
#include "digram/errors.hpp"
#include "digram/subsets.hpp"
#include "digram/synth.hpp"
#include "digram/table.hpp"

namespace digram {

namespace {

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
}

void print_parse_stats(const ParseStats& stats, std::ostream& out) {
  out << "files_scanned: " << stats.files_scanned << '\n'
      << "files_skipped: " << stats.files_skipped << '\n'
      << "fragments_total: " << stats.fragments_total << '\n'
      << "fragments_parsed: " << stats.fragments_parsed << '\n'
      << "fragments_failed: " << stats.fragments_failed << '\n';
}

}  // namespace

std::string histogram_sidecar_path(const std::string& report_path) {
  const std::size_t slash = report_path.find_last_of('/');
  const std::size_t dot = report_path.find_last_of('.');
  if (dot != std::string::npos &&
      (slash == std::string::npos || dot > slash)) {
    return report_path.substr(0, dot) + ".hist.csv";
  }
  return report_path + ".hist.csv";
}

int run_mine(const MineOptions& options, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&]() {
    if (options.corpus_dir.empty() || options.out_table.empty()) {
      throw InputError("mine needs --corpus and --out");
    }
    CorpusSpec spec;
    spec.roots = {options.corpus_dir};
    spec.include_glob = options.include_glob;
    spec.max_file_bytes = options.max_file_bytes;

    ParseStats stats;
    const DigramTable table = mine_corpus(spec, {}, &stats);
    save_table(table, options.out_table);

    print_parse_stats(stats, out);
    out << "vocab_size: " << table.vocabulary.size() << '\n'
        << "distinct_digrams: " << table.counts.size() << '\n'
        << "total_occurrences: " << table.total_occurrences() << '\n';
    if (table.counts.empty()) {
      err << "warning: no digrams mined from " << options.corpus_dir << '\n';
    }
    return kExitOk;
  });
}

int run_stats(const StatsOptions& options, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&]() {
    if (options.table.empty()) throw InputError("stats needs --table");
    const DigramTable table = load_table(options.table);
    const DigramStats stats = compute_stats(table);

    write_stats_report(stats, out);
    if (!options.out.empty()) {
      std::ofstream report(options.out, std::ios::binary);
      if (!report) throw InputError("cannot write report: " + options.out);
      write_stats_report(stats, report);

      const std::string hist_path = histogram_sidecar_path(options.out);
      std::ofstream hist(hist_path, std::ios::binary);
      if (!hist) throw InputError("cannot write histogram: " + hist_path);
      write_histogram_csv(stats, hist);
    }
    return kExitOk;
  });
}

int run_subsets(const SubsetsOptions& options, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&]() {
    if (options.corpus_dir.empty() || options.out.empty()) {
      throw InputError("subsets needs --corpus and --out");
    }
    if (options.max_subset_size < 1) {
      throw InputError("--max-subset-size must be >= 1");
    }
    CorpusSpec spec;
    spec.roots = {options.corpus_dir};
    spec.include_glob = options.include_glob;

    ParseStats stats;
    const std::vector<ProgramUnit> units =
        extract_units_from_corpus(spec, {}, &stats);
    const std::vector<InstructionSubset> subsets =
        cluster_subsets(units, options.max_subset_size);
    save_subsets(subsets, options.max_subset_size, options.out);

    const UnitSizeDistribution dist = unit_size_distribution(units);
    out << "units: " << units.size() << '\n'
        << "subsets: " << subsets.size() << '\n';
    char buf[64];
    std::snprintf(buf, sizeof(buf), "fraction_le_10: %.6f\n",
                  dist.fraction_le_10);
    out << buf;
    std::snprintf(buf, sizeof(buf), "fraction_le_20: %.6f\n",
                  dist.fraction_le_20);
    out << buf;
    if (units.empty()) {
      err << "warning: no program units found in " << options.corpus_dir
          << '\n';
    }
    return kExitOk;
  });
}

int run_model(const ModelOptions& options, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&]() {
    if (options.table.empty() || options.subsets.empty() ||
        options.out_csv.empty()) {
      throw InputError("model needs --table, --subsets and --out");
    }
    if (options.depth < 1) throw InputError("--depth must be >= 1");

    const DigramTable table = load_table(options.table);
    const std::vector<InstructionSubset> subsets =
        load_subsets(options.subsets);
    const AllowedDigrams allowed =
        filter_threshold(table, options.threshold);

    SpaceModelConfig config;
    config.depth_max = options.depth;
    config.model = options.model;
    config.threshold = options.threshold;

    const SpaceReport report =
        compare(subsets, allowed, table.vocabulary.size(), config);
    export_report(report, options.out_csv);

    out << "subsets: " << report.subsets.size() << '\n'
        << "depth_max: " << config.depth_max << '\n'
        << "allowed_digrams: " << allowed.digrams.size() << '\n'
        << "rows: " << report.subsets.size() * 3 *
                           static_cast<std::size_t>(config.depth_max)
        << '\n';
    return kExitOk;
  });
}

int run_synth(const SynthOptions& options, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&]() {
    if (options.tasks.empty() || options.out_csv.empty()) {
      throw InputError("synth needs --tasks and --out");
    }
    const std::vector<SynthTask> tasks = load_tasks(options.tasks);

    std::optional<AllowedDigrams> gate;
    if (!options.table.empty()) {
      gate = filter_threshold(load_table(options.table), options.threshold);
    }

    // Optional roster restriction to the instructions the subsets cover.
    std::vector<TypedInstruction> roster = default_dsl();
    if (!options.subsets.empty()) {
      std::set<InstructionId> covered;
      for (const InstructionSubset& subset : load_subsets(options.subsets)) {
        covered.insert(subset.members.begin(), subset.members.end());
      }
      std::vector<TypedInstruction> restricted;
      for (const TypedInstruction& instruction : roster) {
        if (covered.count(instruction.id)) restricted.push_back(instruction);
      }
      roster = std::move(restricted);
      if (roster.empty()) {
        throw InputError("subsets cover no DSL instruction");
      }
    }

    std::ofstream csv(options.out_csv, std::ios::binary);
    if (!csv) throw InputError("cannot write CSV: " + options.out_csv);
    csv << "task_id,regime,expansions,found,depth\n";

    for (const SynthTask& task : tasks) {
      SynthConfig config;
      config.instructions =
          task.instructions.empty() ? roster : dsl_subset(task.instructions);
      config.max_depth = task.max_depth.value_or(options.depth);
      config.node_budget = options.budget;

      config.allowed = std::nullopt;
      const SynthResult complete = synthesize(task.tests, config);
      config.allowed = gate;
      const SynthResult gated = synthesize(task.tests, config);

      for (const auto& [regime, result] :
           {std::pair<const char*, const SynthResult&>{"complete", complete},
            {"gated", gated}}) {
        csv << task.id << ',' << regime << ',' << result.expansions << ','
            << (result.found ? "true" : "false") << ',';
        if (result.found) csv << result.depth;
        csv << '\n';
      }
      out << task.id << ": complete=" << complete.expansions
          << " gated=" << gated.expansions;
      if (gated.found) {
        out << " solution=" << gated.expression;
      } else if (complete.found) {
        out << " solution(complete)=" << complete.expression;
      } else {
        out << " unsolved";
      }
      out << '\n';
    }
    return kExitOk;
  });
}

}  // namespace digram
