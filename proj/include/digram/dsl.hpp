// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIGRAM_DSL_HPP_
#define DIGRAM_DSL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "digram/synth.hpp"

namespace digram {

// The bundled instruction roster (see docs/dsl.md): integer arithmetic,
// list and string operations and a couple of predicates. Arithmetic and
// library-style names line up with the mining labeler where the language
// has a counterpart ("+", "len", "sorted", ...), so corpus-mined digram
// tables gate the synthesizer directly.
const std::vector<TypedInstruction>& default_dsl();

// The named sub-roster, validated against default_dsl().
std::vector<TypedInstruction> dsl_subset(const std::vector<std::string>& names);

// One synthesis task from a task file.
struct SynthTask {
  std::string id;
  std::vector<TestCase> tests;
  // Optional per-task restriction of the instruction roster.
  std::vector<std::string> instructions;
  std::optional<int> max_depth;
};

// JSON task file: an array of {"id": ..., "tests": [{"inputs": [...],
// "expected": ...}, ...]} records, with optional "instructions" and
// "max_depth" fields. Integers, booleans, strings and lists of integers are
// the supported value shapes.
std::vector<SynthTask> load_tasks(const std::string& path);

}  // namespace digram

#endif  // DIGRAM_DSL_HPP_
