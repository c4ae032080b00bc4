// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIGRAM_INSTRUCTION_HPP_
#define DIGRAM_INSTRUCTION_HPP_

#include <compare>
#include <string>

namespace digram {

// Canonical name of an instruction: an operator symbol ("+", "==", "not")
// or the normalized name of a function/method ("len", "strip").
class InstructionId {
 public:
  InstructionId() = default;
  explicit InstructionId(std::string name) : name_(std::move(name)) {}

  const std::string& str() const noexcept { return name_; }
  bool empty() const noexcept { return name_.empty(); }

  friend auto operator<=>(const InstructionId&, const InstructionId&) = default;

 private:
  std::string name_;
};

// Ordered pair [first, second]: `second` consumes the output value of
// `first`. (a,b) and (b,a) are distinct digrams.
struct Digram {
  InstructionId first;
  InstructionId second;

  friend auto operator<=>(const Digram&, const Digram&) = default;
};

}  // namespace digram

#endif  // DIGRAM_INSTRUCTION_HPP_
