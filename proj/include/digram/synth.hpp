// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIGRAM_SYNTH_HPP_
#define DIGRAM_SYNTH_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "digram/bigint.hpp"
#include "digram/instruction.hpp"
#include "digram/table.hpp"

namespace digram {

enum class ValueKind { Int, Bool, Str, List };

const char* to_string(ValueKind kind);

// Runtime value of the little DSL: arbitrary-precision integer, boolean,
// text, or list. Equality is structural; there is a total order so lists
// can be sorted deterministically.
class Value {
 public:
  Value() : data_(BigInt(0)) {}
  static Value integer(BigInt v) { return Value(std::move(v)); }
  static Value boolean(bool v) { return Value(v); }
  static Value str(std::string v) { return Value(std::move(v)); }
  static Value list(std::vector<Value> v) { return Value(std::move(v)); }

  ValueKind kind() const { return static_cast<ValueKind>(data_.index()); }
  const BigInt& as_int() const { return std::get<BigInt>(data_); }
  bool as_bool() const { return std::get<bool>(data_); }
  const std::string& as_str() const { return std::get<std::string>(data_); }
  const std::vector<Value>& as_list() const {
    return std::get<std::vector<Value>>(data_);
  }

  std::string repr() const;

  friend bool operator==(const Value&, const Value&);
  friend bool operator<(const Value&, const Value&);

 private:
  explicit Value(BigInt v) : data_(std::move(v)) {}
  explicit Value(bool v) : data_(v) {}
  explicit Value(std::string v) : data_(std::move(v)) {}
  explicit Value(std::vector<Value> v) : data_(std::move(v)) {}

  std::variant<BigInt, bool, std::string, std::vector<Value>> data_;
};

// A DSL instruction: fixed argument/return kinds plus a total semantic
// function. Domain errors (division by zero, head of empty list, runtime
// kind mismatches from heterogeneous task lists) come back as nullopt and
// reject the candidate, never crash the run.
struct TypedInstruction {
  InstructionId id;
  std::vector<ValueKind> arg_types;
  ValueKind return_type;
  std::function<std::optional<Value>(std::span<const Value>)> apply;

  std::size_t arity() const { return arg_types.size(); }
};

struct TestCase {
  std::vector<Value> inputs;
  Value expected;
};

// Immutable candidate expression tree. Leaves are input slots or constants
// (depth and size 0); internal nodes apply an instruction. `instruction`
// points into the owning SynthConfig's instruction vector.
struct CandidateNode;
using Candidate = std::shared_ptr<const CandidateNode>;

struct CandidateNode {
  enum class Kind { Input, Constant, Apply };
  Kind kind = Kind::Input;
  int slot = -1;
  Value constant;
  const TypedInstruction* instruction = nullptr;
  std::vector<Candidate> args;
  ValueKind type = ValueKind::Int;
  int depth = 0;  // longest instruction chain from a leaf to this node
  int size = 0;   // instruction nodes in the tree
};

Candidate make_input(int slot, ValueKind type);
Candidate make_constant(Value value);
Candidate make_apply(const TypedInstruction* instruction,
                     std::vector<Candidate> args);

// Prefix notation, e.g. "dbl(succ(x0))".
std::string expression_string(const Candidate& candidate);

std::optional<Value> evaluate(const Candidate& candidate,
                              std::span<const Value> inputs);

struct SynthConfig {
  std::vector<TypedInstruction> instructions;
  // The digram gate: a parent instruction F2 may take an instruction-rooted
  // argument F1 only if (F1,F2) is allowed. nullopt means COMPLETE (no
  // gate). Leaf arguments are never gated.
  std::optional<AllowedDigrams> allowed;
  int max_depth = 3;
  std::uint64_t node_budget = 100000;
  std::vector<Value> constant_pool = {Value::integer(0), Value::integer(1),
                                      Value::str(""), Value::list({})};
  std::vector<ValueKind> input_types;
};

// Streams well-typed candidates in nondecreasing depth, then nondecreasing
// instruction count; within a (depth, size) bucket the order is fixed:
// instructions in id order, argument assignments in (arg depth, arg size,
// pool position) order. Depth-0 leaves come first: input slots, then the
// constant pool. The stream ends at max_depth or when the node budget is
// spent.
class Enumerator {
 public:
  explicit Enumerator(const SynthConfig& config);

  // Next candidate, or nullptr when the stream is over.
  Candidate next();

  std::uint64_t emitted() const { return emitted_; }
  // True when the stream was cut by the budget rather than exhausted.
  bool budget_exhausted() const { return budget_exhausted_; }

 private:
  void seed_leaves();
  bool advance_bucket();
  void generate_bucket(int depth, int size);
  void generate_for_instruction(const TypedInstruction& instruction, int depth,
                                int size);
  void assign_args(const TypedInstruction& instruction, int depth,
                   std::size_t position, int size_left, bool depth_satisfied,
                   std::vector<Candidate>* partial);
  bool gate_allows(const Candidate& arg,
                   const TypedInstruction& parent) const;
  void push_candidate(Candidate candidate);

  const SynthConfig& config_;
  std::vector<const TypedInstruction*> ordered_instructions_;
  // pools_[kind][depth] maps exact size -> candidates in emission order.
  std::array<std::vector<std::map<int, std::vector<Candidate>>>, 4> pools_;
  std::vector<Candidate> bucket_;
  std::size_t bucket_pos_ = 0;
  int current_depth_ = -1;
  int current_size_ = 0;
  std::vector<int> max_size_at_depth_;
  std::uint64_t emitted_ = 0;
  std::uint64_t generated_ = 0;
  bool budget_exhausted_ = false;
  bool done_ = false;
};

// Convenience: the full stream (respecting the budget).
std::vector<Candidate> enumerate_all(const SynthConfig& config);

// True iff the candidate reproduces every expected output exactly. Domain
// errors reject.
bool check(const Candidate& candidate, const std::vector<TestCase>& tests);

struct SynthResult {
  bool found = false;
  Candidate candidate;  // references config.instructions; null if !found
  std::string expression;
  int depth = -1;
  int size = 0;
  std::uint64_t expansions = 0;  // candidates evaluated
  bool budget_limited = false;   // NotFound because the budget ran out
};

// First candidate in enumeration order passing every test, with the number
// of candidates evaluated. Deterministic for identical (tests, config).
SynthResult synthesize(const std::vector<TestCase>& tests,
                       const SynthConfig& config);

std::uint64_t count_expansions(const std::vector<TestCase>& tests,
                               const SynthConfig& config);

}  // namespace digram

#endif  // DIGRAM_SYNTH_HPP_
