// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIGRAM_PARSER_HPP_
#define DIGRAM_PARSER_HPP_

#include <string>
#include <variant>

#include "digram/ast.hpp"

namespace digram {

struct ParseError {
  std::string message;
  int position = 0;  // character offset into the fragment
};

using ParseResult = std::variant<AstPtr, ParseError>;

// Parses one expression fragment with the standard operator precedence
// table (power > unary > multiplicative > additive > shifts > & > ^ > | >
// comparisons > not > and > or). Calls, method calls, subscripts and
// parenthesized groups are handled; constructs outside the expression
// grammar (lambdas, comprehension tails) degrade to opaque nodes where they
// can be skipped locally. Returns a ParseError instead of throwing: a corpus
// run never aborts on malformed code.
ParseResult parse_expression(const std::string& text);

inline bool parse_failed(const ParseResult& r) {
  return std::holds_alternative<ParseError>(r);
}

}  // namespace digram

#endif  // DIGRAM_PARSER_HPP_
