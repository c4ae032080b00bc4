// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#include "digram/table.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "digram/csv.hpp"
#include "digram/errors.hpp"
#include "digram/parser.hpp"

namespace digram {

const char* to_string(Scope scope) {
  switch (scope) {
    case Scope::File: return "file";
    case Scope::Repo: return "repo";
    case Scope::Corpus: return "corpus";
  }
  return "file";
}

Scope scope_from_string(const std::string& s) {
  if (s == "file") return Scope::File;
  if (s == "repo") return Scope::Repo;
  if (s == "corpus") return Scope::Corpus;
  throw InputError("unknown scope: " + s);
}

void DigramTable::add(const Digram& digram, std::uint64_t n) {
  DIGRAM_CHECK(n > 0);
  counts[digram] += n;
  vocabulary.insert(digram.first);
  vocabulary.insert(digram.second);
}

void DigramTable::add_instruction(const InstructionId& instruction) {
  vocabulary.insert(instruction);
}

std::uint64_t DigramTable::total_occurrences() const {
  std::uint64_t total = 0;
  for (const auto& [digram, count] : counts) total += count;
  return total;
}

DigramTable merge(const DigramTable& a, const DigramTable& b) {
  DigramTable out = a;
  merge_into(&out, b);
  return out;
}

void merge_into(DigramTable* into, const DigramTable& from) {
  for (const auto& [digram, count] : from.counts) {
    into->counts[digram] += count;
  }
  into->vocabulary.insert(from.vocabulary.begin(), from.vocabulary.end());
  into->scope = std::max(into->scope, from.scope);
}

namespace {

void extract_walk(const AstNode& node, const LabelConfig& config,
                  std::map<Digram, std::uint64_t>* out) {
  const std::optional<InstructionId> parent = instruction_label(node, config);
  for (const AstPtr& child : node.operands) {
    if (parent) {
      if (const std::optional<InstructionId> first =
              instruction_label(*child, config)) {
        ++(*out)[Digram{*first, *parent}];
      }
    }
    extract_walk(*child, config, out);
  }
}

}  // namespace

std::map<Digram, std::uint64_t> extract_digrams(const AstNode& ast,
                                                const LabelConfig& config) {
  std::map<Digram, std::uint64_t> out;
  extract_walk(ast, config, &out);
  return out;
}

void collect_labels(const AstNode& ast, const LabelConfig& config,
                    std::set<InstructionId>* out) {
  if (const std::optional<InstructionId> label =
          instruction_label(ast, config)) {
    out->insert(*label);
  }
  for (const AstPtr& child : ast.operands) {
    collect_labels(*child, config, out);
  }
}

FileAnalysis analyze_file(const SourceFile& file, const MiningConfig& config) {
  FileAnalysis analysis;
  analysis.path = file.path;
  analysis.repo_id = file.repo_id;

  const std::string normalized = preprocess(file.text);
  analysis.units = unit_spans(normalized);

  SplitResult split =
      split_expressions(normalized, file.path, config.max_bracket_depth);
  analysis.stats.fragments_total =
      split.fragments.size() + split.dropped_over_depth;
  analysis.stats.fragments_failed = split.dropped_over_depth;

  for (Fragment& fragment : split.fragments) {
    ParseResult result = parse_expression(fragment.text);
    if (parse_failed(result)) {
      ++analysis.stats.fragments_failed;
      analysis.fragments.push_back({std::move(fragment), nullptr});
    } else {
      ++analysis.stats.fragments_parsed;
      analysis.fragments.push_back(
          {std::move(fragment), std::move(std::get<AstPtr>(result))});
    }
  }
  return analysis;
}

DigramTable mine_file(const SourceFile& file, const MiningConfig& config,
                      ParseStats* stats) {
  const FileAnalysis analysis = analyze_file(file, config);
  if (stats) *stats += analysis.stats;

  DigramTable table;
  table.scope = Scope::File;
  table.id = file.path;
  for (const AnalyzedFragment& frag : analysis.fragments) {
    if (!frag.ast) continue;
    collect_labels(*frag.ast, config.label, &table.vocabulary);
    for (const auto& [digram, count] : extract_digrams(*frag.ast, config.label)) {
      table.add(digram, count);
    }
  }
  return table;
}

DigramTable mine_corpus(const CorpusSpec& spec, const MiningConfig& config,
                        ParseStats* stats) {
  std::map<std::string, DigramTable> repo_tables;
  for_each_source_file(
      spec,
      [&](SourceFile file) {
        DigramTable file_table = mine_file(file, config, stats);
        merge_into(&repo_tables[file.repo_id], file_table);
      },
      stats);

  DigramTable corpus;
  for (auto& [repo_id, table] : repo_tables) {
    table.scope = Scope::Repo;
    table.id = repo_id;
    merge_into(&corpus, table);
  }
  corpus.scope = Scope::Corpus;
  corpus.id = "<corpus>";
  return corpus;
}

namespace {

std::string format_fraction(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

}  // namespace

DigramStats compute_stats(const DigramTable& table,
                          const std::vector<std::uint64_t>& quantile_ks) {
  DigramStats stats;
  stats.vocab_size = table.vocabulary.size();
  stats.possible = static_cast<std::uint64_t>(stats.vocab_size) *
                   static_cast<std::uint64_t>(stats.vocab_size);
  stats.distinct = table.counts.size();
  stats.total_occurrences = table.total_occurrences();
  stats.degenerate = stats.vocab_size == 0;

  if (!stats.degenerate) {
    stats.coverage_fraction =
        static_cast<double>(stats.distinct) / static_cast<double>(stats.possible);
    stats.absent_fraction = 1.0 - stats.coverage_fraction;
  }

  std::vector<std::uint64_t> ks = quantile_ks;
  std::sort(ks.begin(), ks.end());
  for (std::uint64_t k : ks) {
    std::size_t at_most = 0;
    for (const auto& [digram, count] : table.counts) {
      if (count <= k) ++at_most;
    }
    const double fraction =
        stats.distinct == 0
            ? 0.0
            : static_cast<double>(at_most) / static_cast<double>(stats.distinct);
    stats.quantiles.emplace_back(k, fraction);
  }

  const char* kBucketNames[] = {"1", "2-10", "11-100", "101-1000", ">1000"};
  std::size_t buckets[5] = {0, 0, 0, 0, 0};
  for (const auto& [digram, count] : table.counts) {
    if (count <= 1) ++buckets[0];
    else if (count <= 10) ++buckets[1];
    else if (count <= 100) ++buckets[2];
    else if (count <= 1000) ++buckets[3];
    else ++buckets[4];
  }
  for (int i = 0; i < 5; ++i) {
    stats.histogram.emplace_back(kBucketNames[i], buckets[i]);
  }
  return stats;
}

AllowedDigrams filter_threshold(const DigramTable& table,
                                std::uint64_t threshold) {
  if (threshold < 1) {
    throw InputError("digram threshold must be >= 1");
  }
  AllowedDigrams allowed;
  allowed.source_id = table.id;
  allowed.threshold = threshold;
  for (const auto& [digram, count] : table.counts) {
    if (count >= threshold) allowed.digrams.insert(digram);
  }
  return allowed;
}

std::string vocab_sidecar_path(const std::string& table_path) {
  const std::size_t slash = table_path.find_last_of('/');
  const std::size_t dot = table_path.find_last_of('.');
  if (dot != std::string::npos &&
      (slash == std::string::npos || dot > slash)) {
    return table_path.substr(0, dot) + ".vocab";
  }
  return table_path + ".vocab";
}

void save_table(const DigramTable& table, const std::string& path) {
  std::vector<std::pair<Digram, std::uint64_t>> rows(table.counts.begin(),
                                                     table.counts.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write table file: " + path);
  out << "first,second,count\n";
  for (const auto& [digram, count] : rows) {
    out << csv_escape(digram.first.str()) << ','
        << csv_escape(digram.second.str()) << ',' << count << '\n';
  }
  if (!out) throw InputError("write failed: " + path);

  const std::string vocab_path = vocab_sidecar_path(path);
  std::ofstream vout(vocab_path, std::ios::binary);
  if (!vout) throw InputError("cannot write vocabulary file: " + vocab_path);
  vout << "# scope=" << to_string(table.scope) << '\n';
  for (const InstructionId& id : table.vocabulary) {
    vout << id.str() << '\n';
  }
  if (!vout) throw InputError("write failed: " + vocab_path);
}

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

DigramTable load_table(const std::string& path) {
  const std::vector<std::string> lines = read_lines(path);
  if (lines.empty() || lines[0] != "first,second,count") {
    throw FormatError(path, 1, "expected header 'first,second,count'");
  }

  DigramTable table;
  table.id = path;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    if (lines[i].empty()) continue;
    std::vector<std::string> fields;
    if (!csv_split(lines[i], &fields) || fields.size() != 3) {
      throw FormatError(path, line_no, "expected 3 fields");
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw FormatError(path, line_no, "empty instruction name");
    }
    std::uint64_t count = 0;
    const auto [ptr, ec] = std::from_chars(
        fields[2].data(), fields[2].data() + fields[2].size(), count);
    if (ec != std::errc() || ptr != fields[2].data() + fields[2].size()) {
      throw FormatError(path, line_no, "bad count '" + fields[2] + "'");
    }
    if (count == 0) {
      throw FormatError(path, line_no, "digram count must be >= 1");
    }
    const Digram digram{InstructionId(fields[0]), InstructionId(fields[1])};
    if (table.counts.count(digram) > 0) {
      throw FormatError(path, line_no, "duplicate digram row");
    }
    table.counts[digram] = count;
  }

  const std::string vocab_path = vocab_sidecar_path(path);
  const std::vector<std::string> vocab_lines = read_lines(vocab_path);
  if (vocab_lines.empty() || vocab_lines[0].rfind("# scope=", 0) != 0) {
    throw FormatError(vocab_path, 1, "expected '# scope=<file|repo|corpus>'");
  }
  table.scope = scope_from_string(vocab_lines[0].substr(8));
  for (std::size_t i = 1; i < vocab_lines.size(); ++i) {
    if (vocab_lines[i].empty()) continue;
    table.vocabulary.insert(InstructionId(vocab_lines[i]));
  }

  for (const auto& [digram, count] : table.counts) {
    if (table.vocabulary.count(digram.first) == 0 ||
        table.vocabulary.count(digram.second) == 0) {
      throw FormatError(vocab_path, 1,
                        "vocabulary does not cover digram '" +
                            digram.first.str() + "," + digram.second.str() +
                            "'");
    }
  }
  return table;
}

void write_stats_report(const DigramStats& stats, std::ostream& out) {
  out << "vocab_size: " << stats.vocab_size << '\n';
  out << "possible_digrams: " << stats.possible << '\n';
  out << "distinct_digrams: " << stats.distinct << '\n';
  out << "total_occurrences: " << stats.total_occurrences << '\n';
  out << "coverage_fraction: " << format_fraction(stats.coverage_fraction)
      << '\n';
  out << "absent_fraction: " << format_fraction(stats.absent_fraction) << '\n';
  for (const auto& [k, fraction] : stats.quantiles) {
    out << "fraction_count_le_" << k << ": " << format_fraction(fraction)
        << '\n';
  }
  out << "degenerate: " << (stats.degenerate ? "true" : "false") << '\n';
}

void write_histogram_csv(const DigramStats& stats, std::ostream& out) {
  out << "bucket,count\n";
  for (const auto& [bucket, count] : stats.histogram) {
    out << csv_escape(bucket) << ',' << count << '\n';
  }
}

}  // namespace digram
