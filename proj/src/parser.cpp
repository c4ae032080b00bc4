// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#include "digram/parser.hpp"

#include <cctype>
#include <map>
#include <utility>

namespace digram {

namespace {

enum class TokKind { End, Name, Number, Op, Punct };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  int pos = 0;
};

// Internal control-flow exception; converted to ParseError at the API edge.
struct ParseFail {
  std::string message;
  int pos;
};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

std::vector<Token> tokenize(const std::string& text) {
  static const char* kTwoCharOps[] = {"**", "//", "<<", ">>", "<=", ">=",
                                      "==", "!=", "->", ":="};
  static const char kOneCharOps[] = "+-*/%@&|^~<>=!";
  static const char kPuncts[] = "()[]{},.:;";

  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const int pos = static_cast<int>(i);
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < n && is_ident_char(text[j])) ++j;
      tokens.push_back({TokKind::Name, text.substr(i, j - i), pos});
      i = j;
      continue;
    }
    if (is_digit(c) || (c == '.' && i + 1 < n && is_digit(text[i + 1]))) {
      // Lenient numeric scan covering ints, floats, hex/oct/bin forms,
      // digit separators, exponents and imaginary suffixes.
      const bool hex = c == '0' && i + 1 < n &&
                       (text[i + 1] == 'x' || text[i + 1] == 'X');
      std::size_t j = i;
      while (j < n) {
        const char d = text[j];
        if (is_ident_char(d) || d == '.') {
          ++j;
          continue;
        }
        if (!hex && (d == '+' || d == '-') && j > i &&
            (text[j - 1] == 'e' || text[j - 1] == 'E')) {
          ++j;
          continue;
        }
        break;
      }
      tokens.push_back({TokKind::Number, text.substr(i, j - i), pos});
      i = j;
      continue;
    }
    bool matched = false;
    for (const char* op : kTwoCharOps) {
      if (i + 1 < n && text[i] == op[0] && text[i + 1] == op[1]) {
        tokens.push_back({TokKind::Op, op, pos});
        i += 2;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::string(kOneCharOps).find(c) != std::string::npos) {
      tokens.push_back({TokKind::Op, std::string(1, c), pos});
      ++i;
      continue;
    }
    if (std::string(kPuncts).find(c) != std::string::npos) {
      tokens.push_back({TokKind::Punct, std::string(1, c), pos});
      ++i;
      continue;
    }
    throw ParseFail{"unexpected character '" + std::string(1, c) + "'", pos};
  }
  tokens.push_back({TokKind::End, "", static_cast<int>(n)});
  return tokens;
}

constexpr int kNotBp = 25;

// Binding power of a binary operator token, 0 if it is not one.
int binary_bp(const std::string& op) {
  static const std::map<std::string, int> kTable = {
      {"or", 10},  {"and", 20},
      {"<", 30},   {"<=", 30}, {">", 30},  {">=", 30}, {"==", 30},
      {"!=", 30},  {"in", 30}, {"is", 30}, {"not in", 30}, {"is not", 30},
      {"|", 40},   {"^", 50},  {"&", 60},
      {"<<", 70},  {">>", 70},
      {"+", 80},   {"-", 80},
      {"*", 90},   {"/", 90},  {"//", 90}, {"%", 90},  {"@", 90},
  };
  const auto it = kTable.find(op);
  return it == kTable.end() ? 0 : it->second;
}

class ExprParser {
 public:
  explicit ExprParser(const std::vector<Token>& tokens) : toks_(tokens) {}

  AstPtr parse() {
    AstPtr node = parse_ternary();
    if (peek().kind != TokKind::End) {
      throw ParseFail{"trailing tokens after expression", peek().pos};
    }
    return node;
  }

 private:
  const std::vector<Token>& toks_;
  std::size_t idx_ = 0;
  int depth_ = 0;

  struct DepthGuard {
    explicit DepthGuard(ExprParser* p) : parser(p) {
      if (++parser->depth_ > 400) {
        throw ParseFail{"expression nested too deeply",
                        parser->peek().pos};
      }
    }
    ~DepthGuard() { --parser->depth_; }
    ExprParser* parser;
  };

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = idx_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }

  Token consume() { return toks_[idx_ < toks_.size() - 1 ? idx_++ : idx_]; }

  bool at(TokKind kind, const std::string& text) const {
    return peek().kind == kind && peek().text == text;
  }

  void expect(TokKind kind, const std::string& text) {
    if (!at(kind, text)) {
      throw ParseFail{"expected '" + text + "'", peek().pos};
    }
    consume();
  }

  // Consumes the rest of a bracketed region we do not model (comprehension
  // tails, generator arguments), up to and including `close` at the current
  // nesting level.
  void skip_balanced_until(const std::string& close) {
    int depth = 0;
    while (true) {
      const Token tok = consume();
      if (tok.kind == TokKind::End) {
        throw ParseFail{"unbalanced brackets", tok.pos};
      }
      if (tok.kind != TokKind::Punct) continue;
      if (tok.text == "(" || tok.text == "[" || tok.text == "{") {
        ++depth;
      } else if (tok.text == ")" || tok.text == "]" || tok.text == "}") {
        if (depth == 0) {
          if (tok.text == close) return;
          throw ParseFail{"mismatched '" + tok.text + "'", tok.pos};
        }
        --depth;
      }
    }
  }

  AstPtr parse_ternary() {
    DepthGuard guard(this);
    AstPtr value = parse_binary(0);
    if (!at(TokKind::Name, "if")) return value;
    consume();
    AstPtr cond = parse_binary(0);
    expect(TokKind::Name, "else");
    AstPtr alt = parse_ternary();
    std::vector<AstPtr> children;
    children.push_back(std::move(value));
    children.push_back(std::move(cond));
    children.push_back(std::move(alt));
    return make_call("__ifexp__", CallForm::Container, std::move(children));
  }

  // Returns the binary operator at the cursor (joining `not in` / `is not`)
  // without consuming it, or an empty string.
  std::string binary_op_here() const {
    const Token& tok = peek();
    if (tok.kind == TokKind::Op) {
      return binary_bp(tok.text) > 0 ? tok.text : "";
    }
    if (tok.kind != TokKind::Name) return "";
    if (tok.text == "not") {
      return peek(1).kind == TokKind::Name && peek(1).text == "in" ? "not in"
                                                                   : "";
    }
    if (tok.text == "is") {
      return peek(1).kind == TokKind::Name && peek(1).text == "not"
                 ? "is not"
                 : "is";
    }
    return binary_bp(tok.text) > 0 ? tok.text : "";
  }

  AstPtr parse_binary(int min_bp) {
    DepthGuard guard(this);
    AstPtr lhs;
    if (at(TokKind::Name, "not") && !(peek(1).kind == TokKind::Name &&
                                      peek(1).text == "in") &&
        kNotBp >= min_bp) {
      consume();
      std::vector<AstPtr> operand;
      operand.push_back(parse_binary(kNotBp));
      lhs = make_op("not", std::move(operand));
    } else {
      lhs = parse_unary();
    }
    while (true) {
      const std::string op = binary_op_here();
      if (op.empty()) break;
      const int bp = binary_bp(op);
      if (bp < min_bp) break;
      consume();
      if (op == "not in" || op == "is not") consume();
      AstPtr rhs = parse_binary(bp + 1);
      std::vector<AstPtr> operands;
      operands.push_back(std::move(lhs));
      operands.push_back(std::move(rhs));
      lhs = make_op(op, std::move(operands));
    }
    return lhs;
  }

  AstPtr parse_unary() {
    DepthGuard guard(this);
    if (peek().kind == TokKind::Op &&
        (peek().text == "+" || peek().text == "-" || peek().text == "~")) {
      const std::string sym = consume().text;
      std::vector<AstPtr> operand;
      operand.push_back(parse_unary());
      return make_op(sym, std::move(operand));
    }
    return parse_power();
  }

  AstPtr parse_power() {
    AstPtr base = parse_postfix();
    if (at(TokKind::Op, "**")) {
      consume();
      // The right operand of ** admits a unary sign: a ** -b.
      AstPtr rhs = parse_unary();
      std::vector<AstPtr> operands;
      operands.push_back(std::move(base));
      operands.push_back(std::move(rhs));
      return make_op("**", std::move(operands));
    }
    return base;
  }

  AstPtr parse_postfix() {
    AstPtr node = parse_atom();
    while (true) {
      if (at(TokKind::Punct, ".")) {
        if (peek(1).kind != TokKind::Name) {
          throw ParseFail{"expected attribute name", peek(1).pos};
        }
        consume();
        const std::string attr = consume().text;
        if (node->kind == AstKind::Var) {
          // Pure dotted chains stay one name; labeling collapses them.
          node->name += "." + attr;
          continue;
        }
        if (at(TokKind::Punct, "(")) {
          consume();
          std::vector<AstPtr> operands;
          operands.push_back(std::move(node));
          parse_args(&operands);
          node = make_call(attr, CallForm::Method, std::move(operands));
        } else {
          // Attribute extraction without a call is not an application.
          std::vector<AstPtr> child;
          child.push_back(std::move(node));
          node = make_call("__attr__", CallForm::Container, std::move(child));
        }
        continue;
      }
      if (at(TokKind::Punct, "(")) {
        consume();
        if (node->kind == AstKind::Var) {
          const std::string callee = node->name;
          std::vector<AstPtr> args;
          parse_args(&args);
          node = make_call(callee, CallForm::Plain, std::move(args));
        } else {
          // Calling a computed value; there is no instruction name to label.
          std::vector<AstPtr> operands;
          operands.push_back(std::move(node));
          parse_args(&operands);
          node =
              make_call("__dyncall__", CallForm::Container, std::move(operands));
        }
        continue;
      }
      if (at(TokKind::Punct, "[")) {
        consume();
        std::vector<AstPtr> operands;
        operands.push_back(std::move(node));
        parse_subscript(&operands);
        node = make_call("getitem", CallForm::Subscript, std::move(operands));
        continue;
      }
      break;
    }
    return node;
  }

  // Parses a call argument list after '('. Keyword names are dropped (the
  // value is the operand); * and ** splats are transparent; a generator
  // argument keeps its element expression and skips the rest.
  void parse_args(std::vector<AstPtr>* out) {
    if (at(TokKind::Punct, ")")) {
      consume();
      return;
    }
    while (true) {
      if (peek().kind == TokKind::Op &&
          (peek().text == "*" || peek().text == "**")) {
        consume();
        out->push_back(parse_ternary());
      } else if (peek().kind == TokKind::Name &&
                 peek(1).kind == TokKind::Op && peek(1).text == "=") {
        consume();
        consume();
        out->push_back(parse_ternary());
      } else {
        AstPtr arg = parse_ternary();
        if (at(TokKind::Name, "for")) {
          out->push_back(std::move(arg));
          skip_balanced_until(")");
          return;
        }
        out->push_back(std::move(arg));
      }
      if (at(TokKind::Punct, ",")) {
        consume();
        if (at(TokKind::Punct, ")")) {
          consume();
          return;
        }
        continue;
      }
      expect(TokKind::Punct, ")");
      return;
    }
  }

  // Parses subscript contents after '['. Slice colons and tuple commas both
  // separate operand expressions; empty slots are fine.
  void parse_subscript(std::vector<AstPtr>* out) {
    while (true) {
      if (at(TokKind::Punct, "]")) {
        consume();
        return;
      }
      if (at(TokKind::Punct, ":") || at(TokKind::Punct, ",")) {
        consume();
        continue;
      }
      out->push_back(parse_ternary());
    }
  }

  // Parses one display element; leading * / ** splats are transparent.
  AstPtr parse_element() {
    if (peek().kind == TokKind::Op &&
        (peek().text == "*" || peek().text == "**")) {
      consume();
    }
    return parse_ternary();
  }

  AstPtr parse_atom() {
    DepthGuard guard(this);
    const Token& tok = peek();
    switch (tok.kind) {
      case TokKind::Name: {
        if (tok.text == "True" || tok.text == "False") {
          consume();
          return make_literal("bool");
        }
        if (tok.text == "None") {
          consume();
          return make_literal("none");
        }
        if (tok.text == "await") {
          consume();
          return parse_unary();
        }
        if (tok.text == "lambda") {
          // Opaque: consume through the lambda up to a separator at this
          // nesting level.
          consume();
          int depth = 0;
          while (true) {
            const Token& t = peek();
            if (t.kind == TokKind::End) break;
            if (t.kind == TokKind::Punct) {
              if (t.text == "(" || t.text == "[" || t.text == "{") {
                ++depth;
              } else if (t.text == ")" || t.text == "]" || t.text == "}") {
                if (depth == 0) break;
                --depth;
              } else if (t.text == "," && depth == 0) {
                break;
              }
            }
            consume();
          }
          return make_var("__lambda__");
        }
        consume();
        return make_var(tok.text);
      }
      case TokKind::Number:
        consume();
        return make_literal("number");
      case TokKind::Punct: {
        if (tok.text == "(") return parse_paren();
        if (tok.text == "[") return parse_list_display();
        if (tok.text == "{") return parse_brace_display();
        if (tok.text == "." && peek(1).kind == TokKind::Punct &&
            peek(1).text == "." && peek(2).kind == TokKind::Punct &&
            peek(2).text == ".") {
          consume();
          consume();
          consume();
          return make_literal("ellipsis");
        }
        break;
      }
      default:
        break;
    }
    throw ParseFail{"unexpected token '" + tok.text + "'", tok.pos};
  }

  AstPtr parse_paren() {
    consume();  // (
    if (at(TokKind::Punct, ")")) {
      consume();
      return make_call("__tuple__", CallForm::Container, {});
    }
    AstPtr first = parse_element();
    if (at(TokKind::Name, "for")) {
      skip_balanced_until(")");
      std::vector<AstPtr> children;
      children.push_back(std::move(first));
      return make_call("__genexp__", CallForm::Container, std::move(children));
    }
    if (at(TokKind::Punct, ",")) {
      std::vector<AstPtr> elems;
      elems.push_back(std::move(first));
      while (at(TokKind::Punct, ",")) {
        consume();
        if (at(TokKind::Punct, ")")) break;
        elems.push_back(parse_element());
      }
      expect(TokKind::Punct, ")");
      return make_call("__tuple__", CallForm::Container, std::move(elems));
    }
    expect(TokKind::Punct, ")");
    return first;  // plain group, transparent
  }

  AstPtr parse_list_display() {
    consume();  // [
    std::vector<AstPtr> elems;
    if (at(TokKind::Punct, "]")) {
      consume();
      return make_call("__list__", CallForm::Container, {});
    }
    elems.push_back(parse_element());
    if (at(TokKind::Name, "for")) {
      skip_balanced_until("]");
      return make_call("__list__", CallForm::Container, std::move(elems));
    }
    while (at(TokKind::Punct, ",")) {
      consume();
      if (at(TokKind::Punct, "]")) break;
      elems.push_back(parse_element());
    }
    expect(TokKind::Punct, "]");
    return make_call("__list__", CallForm::Container, std::move(elems));
  }

  AstPtr parse_brace_display() {
    consume();  // {
    std::vector<AstPtr> elems;
    if (at(TokKind::Punct, "}")) {
      consume();
      return make_call("__dict__", CallForm::Container, {});
    }
    bool is_dict = false;
    while (true) {
      elems.push_back(parse_element());
      if (at(TokKind::Punct, ":")) {
        is_dict = true;
        consume();
        elems.push_back(parse_ternary());
      }
      if (at(TokKind::Name, "for")) {
        skip_balanced_until("}");
        return make_call(is_dict ? "__dict__" : "__set__",
                         CallForm::Container, std::move(elems));
      }
      if (at(TokKind::Punct, ",")) {
        consume();
        if (at(TokKind::Punct, "}")) break;
        continue;
      }
      break;
    }
    expect(TokKind::Punct, "}");
    return make_call(is_dict ? "__dict__" : "__set__", CallForm::Container,
                     std::move(elems));
  }
};

}  // namespace

ParseResult parse_expression(const std::string& text) {
  try {
    const std::vector<Token> tokens = tokenize(text);
    if (tokens.size() == 1) {
      return ParseError{"empty fragment", 0};
    }
    ExprParser parser(tokens);
    return parser.parse();
  } catch (const ParseFail& fail) {
    return ParseError{fail.message, fail.pos};
  }
}

}  // namespace digram
