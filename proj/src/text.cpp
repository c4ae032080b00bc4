// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#include "digram/text.hpp"

#include <algorithm>
#include <cctype>

namespace digram {

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_string_prefix_char(char c) {
  switch (c) {
    case 'r': case 'R': case 'b': case 'B':
    case 'u': case 'U': case 'f': case 'F':
      return true;
    default:
      return false;
  }
}

// Consumes one string literal starting at text[pos] (a quote character) and
// returns the index just past it. Appends the number of newlines seen inside
// to *newlines. Single-quoted literals end at an unescaped newline
// (unterminated in source, recovered here); triple-quoted literals run to the
// closing triple or EOF.
std::size_t scan_literal(const std::string& text, std::size_t pos,
                         int* newlines) {
  const char quote = text[pos];
  const std::size_t n = text.size();
  const bool triple =
      pos + 2 < n && text[pos + 1] == quote && text[pos + 2] == quote;
  std::size_t i = pos + (triple ? 3 : 1);

  while (i < n) {
    const char c = text[i];
    if (c == '\\') {
      // A backslash always escapes the next character, raw strings included
      // (a raw string cannot end in a lone backslash either).
      if (i + 1 < n && text[i + 1] == '\n') ++*newlines;
      i += 2;
      continue;
    }
    if (c == '\n') {
      if (!triple) return i;  // unterminated single-quoted literal
      ++*newlines;
      ++i;
      continue;
    }
    if (c == quote) {
      if (!triple) return i + 1;
      if (i + 2 < n && text[i + 1] == quote && text[i + 2] == quote) {
        return i + 3;
      }
      ++i;
      continue;
    }
    ++i;
  }
  return n;
}

int bracket_delta(char c) {
  switch (c) {
    case '(': case '[': case '{':
      return 1;
    case ')': case ']': case '}':
      return -1;
    default:
      return 0;
  }
}

void rstrip(std::string& s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.pop_back();
  }
}

const char* kSkipKeywords[] = {
    "def",   "class",  "import", "from",     "for",   "with",  "else",
    "try",   "except", "finally", "pass",    "break", "continue",
    "global", "nonlocal", "del",  "raise",   "assert", "lambda",
    "async", "await",
};

bool starts_with_word(const std::string& s, const std::string& word) {
  if (s.size() < word.size() || s.compare(0, word.size(), word) != 0) {
    return false;
  }
  return s.size() == word.size() || !is_ident_char(s[word.size()]);
}

std::string first_word(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && is_ident_char(s[i])) ++i;
  return s.substr(0, i);
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Position of the first `:` at bracket depth zero, or npos.
std::size_t top_level_colon(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    depth += bracket_delta(s[i]);
    if (s[i] == ':' && depth == 0) return i;
  }
  return std::string::npos;
}

// Position of the last assignment `=` at bracket depth zero, or npos.
// Comparison operators (==, !=, <=, >=) do not count; the `=` of an
// augmented assignment (+=, //=, ...) does.
std::size_t last_assignment_eq(const std::string& s) {
  int depth = 0;
  std::size_t found = std::string::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    depth += bracket_delta(c);
    if (c != '=' || depth != 0) continue;
    const char next = i + 1 < s.size() ? s[i + 1] : '\0';
    const char prev = i > 0 ? s[i - 1] : '\0';
    if (next == '=') {
      ++i;  // ==
      continue;
    }
    if (prev == '=' || prev == '!' || prev == '<' || prev == '>') continue;
    found = i;
  }
  return found;
}

bool has_operator_token(const std::string& s) {
  static const char kOps[] = "+-*/%<>!&|^~@";
  for (char c : s) {
    for (const char* p = kOps; *p; ++p) {
      if (c == *p) return true;
    }
  }
  for (const char* word : {"and", "or", "not", "in", "is"}) {
    const std::size_t len = std::string(word).size();
    std::size_t pos = 0;
    while ((pos = s.find(word, pos)) != std::string::npos) {
      const bool left_ok = pos == 0 || !is_ident_char(s[pos - 1]);
      const bool right_ok =
          pos + len >= s.size() || !is_ident_char(s[pos + len]);
      if (left_ok && right_ok) return true;
      ++pos;
    }
  }
  return false;
}

int count_call_sites(const std::string& s) {
  int count = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] != '(') continue;
    const char prev = s[i - 1];
    if (is_ident_char(prev) || prev == ')' || prev == ']') ++count;
  }
  return count;
}

// A fragment that has no operator and fewer than two call sites cannot
// contain two instructions and is dropped before parsing.
bool can_contain_two_instructions(const std::string& expr) {
  return has_operator_token(expr) || count_call_sites(expr) >= 2;
}

}  // namespace

std::string preprocess(const std::string& text) {
  // Pass 1: replace string literals with STR_<k> placeholders, preserving
  // the newlines a multi-line literal spanned.
  std::string replaced;
  replaced.reserve(text.size());
  int next_placeholder = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c != '"' && c != '\'') {
      replaced.push_back(c);
      ++i;
      continue;
    }
    // Literal prefix letters (r, b, f, u and two-letter combinations) were
    // already copied; pull them back out if they are not part of a longer
    // identifier.
    std::size_t prefix_len = 0;
    while (prefix_len < 2 && replaced.size() > prefix_len &&
           is_string_prefix_char(replaced[replaced.size() - 1 - prefix_len])) {
      ++prefix_len;
    }
    if (prefix_len > 0 && replaced.size() > prefix_len &&
        is_ident_char(replaced[replaced.size() - 1 - prefix_len])) {
      prefix_len = 0;
    }
    replaced.resize(replaced.size() - prefix_len);

    int newlines = 0;
    i = scan_literal(text, i, &newlines);
    replaced += "STR_" + std::to_string(next_placeholder++);
    replaced.append(static_cast<std::size_t>(newlines), '\n');
  }

  // Pass 2: strip comments and trailing whitespace, line by line. No quote
  // characters survive pass 1, so every `#` starts a comment.
  std::string out;
  out.reserve(replaced.size());
  std::size_t start = 0;
  while (start <= replaced.size()) {
    std::size_t end = replaced.find('\n', start);
    const bool last = end == std::string::npos;
    std::string line = replaced.substr(
        start, last ? std::string::npos : end - start);
    if (std::size_t hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    rstrip(line);
    out += line;
    if (last) break;
    out.push_back('\n');
    start = end + 1;
  }
  return out;
}

namespace {

// Splits one statement into expression fragments, recursing into the
// remainder after a top-level `:` (single-line bodies like `if x: y = f(g(z))`).
void emit_statement(const std::string& statement, const std::string& path,
                    int line, std::vector<Fragment>* fragments) {
  std::string stmt = trim(statement);
  if (stmt.empty()) return;
  if (stmt[0] == '@') {
    // Decorator line: mine the decorator expression itself.
    stmt = trim(stmt.substr(1));
    if (stmt.empty()) return;
    if (can_contain_two_instructions(stmt)) {
      fragments->push_back({path, line, stmt});
    }
    return;
  }

  const std::string head = first_word(stmt);

  if (head == "return" || head == "yield") {
    const std::string expr = trim(stmt.substr(head.size()));
    if (!expr.empty() && can_contain_two_instructions(expr)) {
      fragments->push_back({path, line, expr});
    }
    return;
  }

  if (head == "if" || head == "elif" || head == "while") {
    const std::size_t colon = top_level_colon(stmt);
    const std::string cond = trim(
        colon == std::string::npos ? stmt.substr(head.size())
                                   : stmt.substr(head.size(),
                                                 colon - head.size()));
    if (!cond.empty() && can_contain_two_instructions(cond)) {
      fragments->push_back({path, line, cond});
    }
    if (colon != std::string::npos) {
      emit_statement(stmt.substr(colon + 1), path, line, fragments);
    }
    return;
  }

  for (const char* kw : kSkipKeywords) {
    if (starts_with_word(stmt, kw)) {
      // Statement forms we do not mine. A single-line suite after `:` is
      // still split out (`def f(x): return g(h(x))`).
      const std::size_t colon = top_level_colon(stmt);
      if (colon != std::string::npos) {
        emit_statement(stmt.substr(colon + 1), path, line, fragments);
      }
      return;
    }
  }

  std::string expr = stmt;
  if (const std::size_t eq = last_assignment_eq(stmt);
      eq != std::string::npos) {
    expr = trim(stmt.substr(eq + 1));
  }
  if (!expr.empty() && can_contain_two_instructions(expr)) {
    fragments->push_back({path, line, expr});
  }
}

}  // namespace

SplitResult split_expressions(const std::string& normalized,
                              const std::string& path,
                              int max_bracket_depth) {
  SplitResult result;

  std::vector<std::string> lines;
  {
    std::size_t start = 0;
    while (start <= normalized.size()) {
      std::size_t end = normalized.find('\n', start);
      if (end == std::string::npos) {
        lines.push_back(normalized.substr(start));
        break;
      }
      lines.push_back(normalized.substr(start, end - start));
      start = end + 1;
    }
  }

  std::size_t li = 0;
  while (li < lines.size()) {
    const int start_line = static_cast<int>(li) + 1;
    std::string logical;
    int depth = 0;
    bool over_depth = false;

    // Assemble one logical line: join while brackets are open or the line
    // ends with an explicit backslash continuation.
    while (li < lines.size()) {
      std::string piece = lines[li++];
      bool backslash = false;
      if (!piece.empty() && piece.back() == '\\') {
        piece.pop_back();
        backslash = true;
      }
      for (char c : piece) {
        depth += bracket_delta(c);
        if (depth > max_bracket_depth) over_depth = true;
      }
      if (!logical.empty()) logical.push_back(' ');
      logical += piece;
      if (over_depth) break;
      if (depth <= 0 && !backslash) break;
    }

    if (over_depth) {
      ++result.dropped_over_depth;
      continue;
    }

    // Split the logical line on top-level `;` separators.
    int d = 0;
    std::size_t stmt_start = 0;
    for (std::size_t i = 0; i <= logical.size(); ++i) {
      if (i < logical.size()) {
        d += bracket_delta(logical[i]);
        if (logical[i] != ';' || d != 0) continue;
      }
      emit_statement(logical.substr(stmt_start, i - stmt_start), path,
                     start_line, &result.fragments);
      stmt_start = i + 1;
    }
  }

  return result;
}

std::vector<UnitSpan> unit_spans(const std::string& normalized) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= normalized.size()) {
    std::size_t end = normalized.find('\n', start);
    if (end == std::string::npos) {
      lines.push_back(normalized.substr(start));
      break;
    }
    lines.push_back(normalized.substr(start, end - start));
    start = end + 1;
  }

  std::vector<UnitSpan> spans;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    std::string rest;
    if (starts_with_word(line, "def")) {
      rest = trim(line.substr(3));
    } else if (starts_with_word(line, "async")) {
      const std::string after = trim(line.substr(5));
      if (!starts_with_word(after, "def")) continue;
      rest = trim(after.substr(3));
    } else {
      continue;
    }
    const std::string name = first_word(rest);
    if (name.empty()) continue;

    // Body runs until the next non-blank line at column zero.
    std::size_t last = i;
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const std::string& l = lines[j];
      if (!l.empty() && l[0] != ' ' && l[0] != '\t') break;
      if (!trim(l).empty()) last = j;
    }
    spans.push_back({name, static_cast<int>(i) + 1, static_cast<int>(last) + 1});
    i = last;
  }
  return spans;
}

std::string unit_of_line(const std::string& path,
                         const std::vector<UnitSpan>& spans, int line) {
  for (const UnitSpan& span : spans) {
    if (line >= span.first_line && line <= span.last_line) {
      return path + "::" + span.name;
    }
  }
  return path;
}

}  // namespace digram
