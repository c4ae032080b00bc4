// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#include "digram/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "digram/errors.hpp"

namespace fs = std::filesystem;

namespace digram {

ParseStats& ParseStats::operator+=(const ParseStats& other) {
  files_scanned += other.files_scanned;
  files_skipped += other.files_skipped;
  fragments_total += other.fragments_total;
  fragments_parsed += other.fragments_parsed;
  fragments_failed += other.fragments_failed;
  return *this;
}

namespace {

bool glob_match_at(const std::string& pat, std::size_t p,
                   const std::string& txt, std::size_t t) {
  while (p < pat.size()) {
    const char pc = pat[p];
    if (pc == '*') {
      // Collapse consecutive stars, then try every split point.
      while (p < pat.size() && pat[p] == '*') ++p;
      if (p == pat.size()) return true;
      for (std::size_t k = t; k <= txt.size(); ++k) {
        if (glob_match_at(pat, p, txt, k)) return true;
      }
      return false;
    }
    if (t >= txt.size()) return false;
    if (pc == '?') {
      ++p;
      ++t;
      continue;
    }
    if (pc == '[') {
      std::size_t q = p + 1;
      bool negate = false;
      if (q < pat.size() && (pat[q] == '!' || pat[q] == '^')) {
        negate = true;
        ++q;
      }
      bool matched = false;
      bool first = true;
      while (q < pat.size() && (pat[q] != ']' || first)) {
        if (q + 2 < pat.size() && pat[q + 1] == '-' && pat[q + 2] != ']') {
          if (pat[q] <= txt[t] && txt[t] <= pat[q + 2]) matched = true;
          q += 3;
        } else {
          if (pat[q] == txt[t]) matched = true;
          ++q;
        }
        first = false;
      }
      if (q >= pat.size()) return false;  // unterminated class
      if (matched == negate) return false;
      p = q + 1;
      ++t;
      continue;
    }
    if (pc != txt[t]) return false;
    ++p;
    ++t;
  }
  return t == txt.size();
}

}  // namespace

bool glob_match(const std::string& pattern, const std::string& text) {
  return glob_match_at(pattern, 0, text, 0);
}

bool is_valid_utf8(const std::string& bytes) {
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    const unsigned char b = static_cast<unsigned char>(bytes[i]);
    std::size_t len;
    unsigned cp;
    if (b < 0x80) {
      ++i;
      continue;
    } else if ((b & 0xE0) == 0xC0) {
      len = 2;
      cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      cp = b & 0x07;
    } else {
      return false;
    }
    if (i + len > n) return false;
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char c = static_cast<unsigned char>(bytes[i + k]);
      if ((c & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (c & 0x3F);
    }
    // Overlong encodings, surrogates and out-of-range points are invalid.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += len;
  }
  return true;
}

namespace {

std::string relative_generic(const fs::path& file, const fs::path& root) {
  return file.lexically_relative(root).generic_string();
}

std::string repo_of(const std::string& rel, const fs::path& root) {
  const std::size_t slash = rel.find('/');
  if (slash != std::string::npos) return rel.substr(0, slash);
  return root.filename().generic_string();
}

}  // namespace

void for_each_source_file(const CorpusSpec& spec,
                          const std::function<void(SourceFile)>& fn,
                          ParseStats* stats) {
  if (spec.roots.empty()) {
    throw InputError("corpus spec has no roots");
  }
  if (spec.max_file_bytes == 0) {
    throw InputError("max_file_bytes must be positive");
  }
  for (const std::string& root_str : spec.roots) {
    const fs::path root(root_str);
    if (!fs::is_directory(root)) {
      throw InputError("corpus root is not a directory: " + root_str);
    }

    std::vector<fs::path> matches;
    const auto opts = fs::directory_options::skip_permission_denied;
    for (const auto& entry : fs::recursive_directory_iterator(root, opts)) {
      if (!entry.is_regular_file()) continue;
      const fs::path& p = entry.path();
      if (!glob_match(spec.include_glob, p.filename().generic_string())) {
        continue;
      }
      const std::string rel = relative_generic(p, root);
      bool excluded = false;
      for (const std::string& pat : spec.exclude_globs) {
        if (glob_match(pat, rel)) {
          excluded = true;
          break;
        }
      }
      if (!excluded) matches.push_back(p);
    }

    std::sort(matches.begin(), matches.end(),
              [&](const fs::path& a, const fs::path& b) {
                return relative_generic(a, root) < relative_generic(b, root);
              });

    for (const fs::path& p : matches) {
      if (stats) ++stats->files_scanned;

      std::error_code ec;
      const std::uintmax_t size = fs::file_size(p, ec);
      if (ec || size > spec.max_file_bytes) {
        if (stats) ++stats->files_skipped;
        continue;
      }

      std::ifstream in(p, std::ios::binary);
      if (!in) {
        if (stats) ++stats->files_skipped;
        continue;
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      std::string text = buf.str();
      if (in.bad() || !is_valid_utf8(text)) {
        if (stats) ++stats->files_skipped;
        continue;
      }

      const std::string rel = relative_generic(p, root);
      fn(SourceFile{repo_of(rel, root), rel, std::move(text)});
    }
  }
}

std::vector<SourceFile> scan_corpus(const CorpusSpec& spec,
                                    ParseStats* stats) {
  std::vector<SourceFile> files;
  for_each_source_file(
      spec, [&](SourceFile f) { files.push_back(std::move(f)); }, stats);
  return files;
}

}  // namespace digram
