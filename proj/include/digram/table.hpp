// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIGRAM_TABLE_HPP_
#define DIGRAM_TABLE_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "digram/ast.hpp"
#include "digram/corpus.hpp"
#include "digram/instruction.hpp"
#include "digram/text.hpp"

namespace digram {

enum class Scope { File, Repo, Corpus };

const char* to_string(Scope scope);
Scope scope_from_string(const std::string& s);

// Multiset of ordered instruction pairs plus the vocabulary of every
// instruction seen anywhere in parsed fragments (digram participant or not).
struct DigramTable {
  std::map<Digram, std::uint64_t> counts;
  std::set<InstructionId> vocabulary;
  Scope scope = Scope::File;
  std::string id = "<memory>";  // provenance only, not part of equality

  // Records `n` occurrences and makes sure both ends are in the vocabulary.
  void add(const Digram& digram, std::uint64_t n = 1);
  void add_instruction(const InstructionId& instruction);

  std::uint64_t total_occurrences() const;
  bool empty() const { return counts.empty() && vocabulary.empty(); }

  friend bool operator==(const DigramTable& a, const DigramTable& b) {
    return a.counts == b.counts && a.vocabulary == b.vocabulary &&
           a.scope == b.scope;
  }
};

// Pointwise count addition and vocabulary union. The result scope is the
// wider of the two, so merging forms a commutative monoid with the empty
// table as identity; roll-up drivers widen the scope explicitly when
// combining same-scope tables (files into a repo, repos into the corpus).
DigramTable merge(const DigramTable& a, const DigramTable& b);
void merge_into(DigramTable* into, const DigramTable& from);

struct MiningConfig {
  LabelConfig label;
  int max_bracket_depth = 100;
};

// Every (F1, F2) pair where operand child F1's output feeds instruction
// node F2, one occurrence per linked pair.
std::map<Digram, std::uint64_t> extract_digrams(const AstNode& ast,
                                                const LabelConfig& config = {});

// All instruction labels in the tree (the vocabulary contribution).
void collect_labels(const AstNode& ast, const LabelConfig& config,
                    std::set<InstructionId>* out);

// One fragment after the full per-file pipeline. `ast` is null when the
// fragment failed to parse.
struct AnalyzedFragment {
  Fragment fragment;
  AstPtr ast;
};

struct FileAnalysis {
  std::string path;
  std::string repo_id;
  std::vector<UnitSpan> units;
  std::vector<AnalyzedFragment> fragments;
  ParseStats stats;  // fragment counters for this file only
};

// preprocess -> split -> parse for one file. Never throws on malformed
// code; failures are counted.
FileAnalysis analyze_file(const SourceFile& file,
                          const MiningConfig& config = {});

// Full per-file mining: failed fragments contribute nothing, parsed ones
// contribute digrams and vocabulary.
DigramTable mine_file(const SourceFile& file, const MiningConfig& config = {},
                      ParseStats* stats = nullptr);

// Mines a whole corpus, rolling file tables up per repo, then across repos.
DigramTable mine_corpus(const CorpusSpec& spec,
                        const MiningConfig& config = {},
                        ParseStats* stats = nullptr);

// Frequency-distribution summary of a table (coverage, occurrence
// quantiles, log-bucketed histogram).
struct DigramStats {
  std::size_t vocab_size = 0;
  std::uint64_t possible = 0;  // vocab_size^2
  std::size_t distinct = 0;
  std::uint64_t total_occurrences = 0;
  double coverage_fraction = 0.0;
  double absent_fraction = 0.0;
  // (k, fraction of distinct digrams with count <= k), nondecreasing in k.
  std::vector<std::pair<std::uint64_t, double>> quantiles;
  // Fixed buckets 1 / 2-10 / 11-100 / 101-1000 / >1000.
  std::vector<std::pair<std::string, std::size_t>> histogram;
  bool degenerate = false;  // empty vocabulary: fractions defined as 0
};

DigramStats compute_stats(
    const DigramTable& table,
    const std::vector<std::uint64_t>& quantile_ks = {1, 2, 5, 10, 100, 1000});

// Digrams surviving a count threshold, used as the binary application gate.
struct AllowedDigrams {
  std::set<Digram> digrams;
  std::string source_id;
  std::uint64_t threshold = 1;

  bool contains(const InstructionId& first, const InstructionId& second) const {
    return digrams.count(Digram{first, second}) > 0;
  }
};

// threshold >= 1; keeps exactly the digrams with count >= threshold.
AllowedDigrams filter_threshold(const DigramTable& table,
                                std::uint64_t threshold);

// Table file: header `first,second,count`, rows sorted by descending count
// then (first, second); names containing separators are double-quoted. A
// sidecar file (same path with a .vocab extension) records the scope and one
// instruction per line.
void save_table(const DigramTable& table, const std::string& path);
DigramTable load_table(const std::string& path);
std::string vocab_sidecar_path(const std::string& table_path);

void write_stats_report(const DigramStats& stats, std::ostream& out);
void write_histogram_csv(const DigramStats& stats, std::ostream& out);

}  // namespace digram

#endif  // DIGRAM_TABLE_HPP_
