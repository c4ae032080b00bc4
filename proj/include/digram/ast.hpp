// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIGRAM_AST_HPP_
#define DIGRAM_AST_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "digram/instruction.hpp"

namespace digram {

enum class AstKind { Call, Op, Var, Literal };

// Distinguishes what a Call node stands for. Only plain and method calls
// label as instructions; subscripts and display containers exist so that
// digrams inside their operands survive, but they are not applications
// themselves (subscripts can be opted in as `getitem`).
enum class CallForm { Plain, Method, Subscript, Container };

struct AstNode;
using AstPtr = std::unique_ptr<AstNode>;

struct AstNode {
  AstKind kind = AstKind::Var;
  // Call: callee name ("len", "np.abs", method name for Method form).
  // Op: operator symbol ("+", "==", "not in").
  // Var: identifier (possibly dotted). Literal: literal kind ("number",
  // "bool", "none").
  std::string name;
  CallForm form = CallForm::Plain;
  std::vector<AstPtr> operands;

  // Method calls carry the receiver as operand 0.
  bool is_method() const {
    return kind == AstKind::Call && form == CallForm::Method;
  }
};

AstPtr make_call(std::string name, CallForm form, std::vector<AstPtr> operands);
AstPtr make_op(std::string symbol, std::vector<AstPtr> operands);
AstPtr make_var(std::string name);
AstPtr make_literal(std::string literal_kind);

struct LabelConfig {
  // Collapse dotted callees to the final segment: np.abs(..) labels as
  // "abs". Off keeps the full dotted path.
  bool collapse_dotted = true;
  // Map subscripts to a pseudo-instruction "getitem" instead of skipping
  // them.
  bool subscript_as_getitem = false;
};

// Instruction identity of one node: operators yield their symbol, calls the
// (normally collapsed) callee name; variables, literals, subscripts and
// containers yield nothing.
std::optional<InstructionId> instruction_label(const AstNode& node,
                                               const LabelConfig& config = {});

// Prefix-notation rendering, used by tests and diagnostics.
std::string to_string(const AstNode& node);

}  // namespace digram

#endif  // DIGRAM_AST_HPP_
