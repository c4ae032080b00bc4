// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIGRAM_CORPUS_HPP_
#define DIGRAM_CORPUS_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace digram {

struct CorpusSpec {
  std::vector<std::string> roots;
  std::string include_glob = "*.py";
  std::vector<std::string> exclude_globs;
  std::uint64_t max_file_bytes = 2u * 1024 * 1024;
};

struct SourceFile {
  std::string repo_id;
  std::string path;  // root-relative, '/'-separated, unique within a run
  std::string text;
};

struct ParseStats {
  std::uint64_t files_scanned = 0;
  std::uint64_t files_skipped = 0;
  std::uint64_t fragments_total = 0;
  std::uint64_t fragments_parsed = 0;
  std::uint64_t fragments_failed = 0;

  ParseStats& operator+=(const ParseStats& other);
  friend bool operator==(const ParseStats&, const ParseStats&) = default;
};

// fnmatch-style matching: `*` (crosses separators), `?`, `[...]`.
bool glob_match(const std::string& pattern, const std::string& text);

// True when `bytes` is well-formed UTF-8. Files failing this are skipped,
// never decoded lossily, so counts stay reproducible.
bool is_valid_utf8(const std::string& bytes);

// Walks every root and yields matching files in lexicographic path order
// (roots in the given order). Oversized, undecodable and unreadable files
// are skipped and counted. A nonexistent root is a configuration error.
void for_each_source_file(const CorpusSpec& spec,
                          const std::function<void(SourceFile)>& fn,
                          ParseStats* stats);

std::vector<SourceFile> scan_corpus(const CorpusSpec& spec, ParseStats* stats);

}  // namespace digram

#endif  // DIGRAM_CORPUS_HPP_
