// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#include "digram/ast.hpp"

#include "digram/errors.hpp"

namespace digram {

AstPtr make_call(std::string name, CallForm form,
                 std::vector<AstPtr> operands) {
  auto node = std::make_unique<AstNode>();
  node->kind = AstKind::Call;
  node->name = std::move(name);
  node->form = form;
  node->operands = std::move(operands);
  DIGRAM_CHECK(form != CallForm::Method || !node->operands.empty());
  return node;
}

AstPtr make_op(std::string symbol, std::vector<AstPtr> operands) {
  auto node = std::make_unique<AstNode>();
  node->kind = AstKind::Op;
  node->name = std::move(symbol);
  node->operands = std::move(operands);
  DIGRAM_CHECK(node->operands.size() == 1 || node->operands.size() == 2);
  return node;
}

AstPtr make_var(std::string name) {
  auto node = std::make_unique<AstNode>();
  node->kind = AstKind::Var;
  node->name = std::move(name);
  return node;
}

AstPtr make_literal(std::string literal_kind) {
  auto node = std::make_unique<AstNode>();
  node->kind = AstKind::Literal;
  node->name = std::move(literal_kind);
  return node;
}

std::optional<InstructionId> instruction_label(const AstNode& node,
                                               const LabelConfig& config) {
  switch (node.kind) {
    case AstKind::Op:
      return InstructionId(node.name);
    case AstKind::Call:
      switch (node.form) {
        case CallForm::Plain:
        case CallForm::Method: {
          if (!config.collapse_dotted) return InstructionId(node.name);
          const std::size_t dot = node.name.rfind('.');
          return InstructionId(dot == std::string::npos
                                   ? node.name
                                   : node.name.substr(dot + 1));
        }
        case CallForm::Subscript:
          if (config.subscript_as_getitem) return InstructionId("getitem");
          return std::nullopt;
        case CallForm::Container:
          return std::nullopt;
      }
      return std::nullopt;
    case AstKind::Var:
    case AstKind::Literal:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string to_string(const AstNode& node) {
  switch (node.kind) {
    case AstKind::Var:
      return node.name;
    case AstKind::Literal:
      return "<" + node.name + ">";
    case AstKind::Op:
    case AstKind::Call: {
      std::string out = node.name;
      out.push_back('(');
      for (std::size_t i = 0; i < node.operands.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(*node.operands[i]);
      }
      out.push_back(')');
      return out;
    }
  }
  return "?";
}

}  // namespace digram
