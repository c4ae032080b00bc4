// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIGRAM_TEXT_HPP_
#define DIGRAM_TEXT_HPP_

#include <string>
#include <vector>

namespace digram {

// One candidate expression after preprocessing. `line` is the 1-based
// physical line the statement starts on.
struct Fragment {
  std::string path;
  int line = 0;
  std::string text;
};

struct SplitResult {
  std::vector<Fragment> fragments;
  // Logical lines whose bracket nesting exceeded the depth cap. These count
  // as failed fragments so the parse counters stay conserved.
  int dropped_over_depth = 0;
};

// Replaces every string literal (including f-/raw-/byte- and triple-quoted
// forms) with a placeholder identifier STR_0, STR_1, ... in left-to-right
// order, then strips `#` comments. Literals are replaced first so quote and
// hash characters inside them can never confuse the comment pass. Newlines
// inside multi-line literals are preserved, keeping 1-based line numbers
// stable for everything that follows.
std::string preprocess(const std::string& text);

// Splits preprocessed text into candidate expression fragments: statements
// are separated by newlines and `;`, bracket-open and backslash continuations
// are joined, and the expression part is pulled out of assignments, `return`
// statements, bare calls and `if`/`elif`/`while` conditions. Fragments that
// cannot contain two instructions (no operator, fewer than two call sites)
// are dropped.
SplitResult split_expressions(const std::string& normalized,
                              const std::string& path = "<memory>",
                              int max_bracket_depth = 100);

// Line range of one top-level `def` (or the file-level remainder), used to
// group fragments into program units.
struct UnitSpan {
  std::string name;    // function name; empty for the file-level unit
  int first_line = 0;  // 1-based, inclusive
  int last_line = 0;   // inclusive
};

// Top-level function spans in preprocessed text. Lines not covered by any
// span belong to the file-level unit.
std::vector<UnitSpan> unit_spans(const std::string& normalized);

// Name of the unit owning `line`: "<path>::<function>" inside a span,
// otherwise the file-level id "<path>".
std::string unit_of_line(const std::string& path,
                         const std::vector<UnitSpan>& spans, int line);

}  // namespace digram

#endif  // DIGRAM_TEXT_HPP_
