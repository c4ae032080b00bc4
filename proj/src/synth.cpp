// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#include "digram/synth.hpp"

#include <algorithm>

#include "digram/errors.hpp"

namespace digram {

const char* to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::Int: return "int";
    case ValueKind::Bool: return "bool";
    case ValueKind::Str: return "str";
    case ValueKind::List: return "list";
  }
  return "?";
}

bool operator==(const Value& a, const Value& b) { return a.data_ == b.data_; }

bool operator<(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  switch (a.kind()) {
    case ValueKind::Int: return a.as_int() < b.as_int();
    case ValueKind::Bool: return a.as_bool() < b.as_bool();
    case ValueKind::Str: return a.as_str() < b.as_str();
    case ValueKind::List:
      return std::lexicographical_compare(
          a.as_list().begin(), a.as_list().end(), b.as_list().begin(),
          b.as_list().end());
  }
  return false;
}

std::string Value::repr() const {
  switch (kind()) {
    case ValueKind::Int:
      return as_int().str();
    case ValueKind::Bool:
      return as_bool() ? "true" : "false";
    case ValueKind::Str: {
      std::string out = "\"";
      for (char c : as_str()) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
      }
      out.push_back('"');
      return out;
    }
    case ValueKind::List: {
      std::string out = "[";
      bool first = true;
      for (const Value& v : as_list()) {
        if (!first) out += ", ";
        out += v.repr();
        first = false;
      }
      out.push_back(']');
      return out;
    }
  }
  return "?";
}

Candidate make_input(int slot, ValueKind type) {
  auto node = std::make_shared<CandidateNode>();
  node->kind = CandidateNode::Kind::Input;
  node->slot = slot;
  node->type = type;
  return node;
}

Candidate make_constant(Value value) {
  auto node = std::make_shared<CandidateNode>();
  node->kind = CandidateNode::Kind::Constant;
  node->type = value.kind();
  node->constant = std::move(value);
  return node;
}

Candidate make_apply(const TypedInstruction* instruction,
                     std::vector<Candidate> args) {
  DIGRAM_CHECK(instruction != nullptr);
  DIGRAM_CHECK(args.size() == instruction->arity());
  auto node = std::make_shared<CandidateNode>();
  node->kind = CandidateNode::Kind::Apply;
  node->instruction = instruction;
  node->type = instruction->return_type;
  int max_child_depth = 0;
  int total_size = 1;
  for (std::size_t i = 0; i < args.size(); ++i) {
    DIGRAM_CHECK(args[i]->type == instruction->arg_types[i]);
    max_child_depth = std::max(max_child_depth, args[i]->depth);
    total_size += args[i]->size;
  }
  node->depth = max_child_depth + 1;
  node->size = total_size;
  node->args = std::move(args);
  return node;
}

std::string expression_string(const Candidate& candidate) {
  switch (candidate->kind) {
    case CandidateNode::Kind::Input:
      return "x" + std::to_string(candidate->slot);
    case CandidateNode::Kind::Constant:
      return candidate->constant.repr();
    case CandidateNode::Kind::Apply: {
      std::string out = candidate->instruction->id.str();
      out.push_back('(');
      for (std::size_t i = 0; i < candidate->args.size(); ++i) {
        if (i > 0) out += ", ";
        out += expression_string(candidate->args[i]);
      }
      out.push_back(')');
      return out;
    }
  }
  return "?";
}

std::optional<Value> evaluate(const Candidate& candidate,
                              std::span<const Value> inputs) {
  switch (candidate->kind) {
    case CandidateNode::Kind::Input:
      DIGRAM_CHECK(candidate->slot >= 0 &&
                   static_cast<std::size_t>(candidate->slot) < inputs.size());
      return inputs[static_cast<std::size_t>(candidate->slot)];
    case CandidateNode::Kind::Constant:
      return candidate->constant;
    case CandidateNode::Kind::Apply: {
      std::vector<Value> args;
      args.reserve(candidate->args.size());
      for (const Candidate& arg : candidate->args) {
        std::optional<Value> value = evaluate(arg, inputs);
        if (!value) return std::nullopt;
        args.push_back(std::move(*value));
      }
      return candidate->instruction->apply(args);
    }
  }
  return std::nullopt;
}

namespace {

void validate_config(const SynthConfig& config) {
  if (config.node_budget < 1) {
    throw InputError("node_budget must be >= 1");
  }
  if (config.max_depth < 0) {
    throw InputError("max_depth must be >= 0");
  }
  std::set<InstructionId> ids;
  for (const TypedInstruction& instruction : config.instructions) {
    if (instruction.arity() < 1) {
      throw InputError("instruction '" + instruction.id.str() +
                       "' must take at least one argument");
    }
    if (!instruction.apply) {
      throw InputError("instruction '" + instruction.id.str() +
                       "' has no semantics");
    }
    if (!ids.insert(instruction.id).second) {
      throw InputError("duplicate instruction id '" + instruction.id.str() +
                       "'");
    }
  }
}

}  // namespace

Enumerator::Enumerator(const SynthConfig& config) : config_(config) {
  validate_config(config);
  for (const TypedInstruction& instruction : config.instructions) {
    ordered_instructions_.push_back(&instruction);
  }
  std::sort(ordered_instructions_.begin(), ordered_instructions_.end(),
            [](const TypedInstruction* a, const TypedInstruction* b) {
              return a->id < b->id;
            });

  std::size_t max_arity = 1;
  for (const TypedInstruction* instruction : ordered_instructions_) {
    max_arity = std::max(max_arity, instruction->arity());
  }
  // Upper bound on instruction count at each exact depth.
  max_size_at_depth_.assign(static_cast<std::size_t>(config.max_depth) + 1, 0);
  for (int d = 1; d <= config.max_depth; ++d) {
    const long long prev = max_size_at_depth_[static_cast<std::size_t>(d) - 1];
    const long long bound =
        1 + static_cast<long long>(max_arity) * prev;
    max_size_at_depth_[static_cast<std::size_t>(d)] =
        static_cast<int>(std::min<long long>(bound, 1 << 20));
  }

  for (auto& per_depth : pools_) {
    per_depth.resize(static_cast<std::size_t>(config.max_depth) + 1);
  }
  seed_leaves();
}

void Enumerator::push_candidate(Candidate candidate) {
  pools_[static_cast<std::size_t>(candidate->type)]
        [static_cast<std::size_t>(candidate->depth)][candidate->size]
            .push_back(candidate);
  bucket_.push_back(std::move(candidate));
  ++generated_;
}

void Enumerator::seed_leaves() {
  bucket_.clear();
  bucket_pos_ = 0;
  current_depth_ = 0;
  current_size_ = 0;
  for (std::size_t slot = 0; slot < config_.input_types.size(); ++slot) {
    push_candidate(
        make_input(static_cast<int>(slot), config_.input_types[slot]));
  }
  for (const Value& value : config_.constant_pool) {
    push_candidate(make_constant(value));
  }
}

bool Enumerator::gate_allows(const Candidate& arg,
                             const TypedInstruction& parent) const {
  if (arg->kind != CandidateNode::Kind::Apply) return true;  // leaves ungated
  if (!config_.allowed) return true;                         // COMPLETE
  return config_.allowed->contains(arg->instruction->id, parent.id);
}

// Chooses candidates for argument slots position.. in fixed order; every
// completed assignment has total child size `size-1` and at least one child
// of exact depth `depth-1`.
void Enumerator::assign_args(const TypedInstruction& instruction, int depth,
                             std::size_t position, int size_left,
                             bool depth_satisfied,
                             std::vector<Candidate>* partial) {
  if (generated_ >= emitted_ + config_.node_budget + 1) return;  // budget cut
  const std::size_t arity = instruction.arity();
  if (position == arity) {
    if (size_left == 0 && depth_satisfied) {
      push_candidate(make_apply(&instruction, *partial));
    }
    return;
  }

  const auto kind_index = static_cast<std::size_t>(
      instruction.arg_types[position]);
  const bool last = position + 1 == arity;
  for (int arg_depth = 0; arg_depth <= depth - 1; ++arg_depth) {
    // The final argument must realize depth-1 if nothing before it did.
    if (last && !depth_satisfied && arg_depth != depth - 1) continue;
    const auto& by_size = pools_[kind_index][static_cast<std::size_t>(arg_depth)];
    for (const auto& [arg_size, pool] : by_size) {
      if (arg_size > size_left) break;
      if (last && arg_size != size_left) continue;
      for (const Candidate& arg : pool) {
        if (!gate_allows(arg, instruction)) continue;
        partial->push_back(arg);
        assign_args(instruction, depth, position + 1, size_left - arg_size,
                    depth_satisfied || arg_depth == depth - 1, partial);
        partial->pop_back();
        if (generated_ >= emitted_ + config_.node_budget + 1) return;
      }
    }
  }
}

void Enumerator::generate_for_instruction(const TypedInstruction& instruction,
                                          int depth, int size) {
  std::vector<Candidate> partial;
  partial.reserve(instruction.arity());
  assign_args(instruction, depth, 0, size - 1, false, &partial);
}

void Enumerator::generate_bucket(int depth, int size) {
  bucket_.clear();
  bucket_pos_ = 0;
  for (const TypedInstruction* instruction : ordered_instructions_) {
    generate_for_instruction(*instruction, depth, size);
    if (generated_ >= emitted_ + config_.node_budget + 1) break;
  }
}

bool Enumerator::advance_bucket() {
  while (true) {
    if (current_depth_ == 0) {
      current_depth_ = 1;
      current_size_ = 1;
    } else if (current_size_ <
               max_size_at_depth_[static_cast<std::size_t>(current_depth_)]) {
      ++current_size_;
    } else {
      ++current_depth_;
      current_size_ = current_depth_;  // a depth-d chain needs >= d nodes
    }
    if (current_depth_ > config_.max_depth) return false;
    generate_bucket(current_depth_, current_size_);
    if (!bucket_.empty()) return true;
  }
}

Candidate Enumerator::next() {
  if (done_) return nullptr;
  while (true) {
    if (bucket_pos_ < bucket_.size()) {
      if (emitted_ >= config_.node_budget) {
        budget_exhausted_ = true;
        done_ = true;
        return nullptr;
      }
      ++emitted_;
      return bucket_[bucket_pos_++];
    }
    if (!advance_bucket()) {
      done_ = true;
      return nullptr;
    }
  }
}

std::vector<Candidate> enumerate_all(const SynthConfig& config) {
  Enumerator enumerator(config);
  std::vector<Candidate> out;
  while (Candidate candidate = enumerator.next()) {
    out.push_back(std::move(candidate));
  }
  return out;
}

bool check(const Candidate& candidate, const std::vector<TestCase>& tests) {
  for (const TestCase& test : tests) {
    const std::optional<Value> got = evaluate(candidate, test.inputs);
    if (!got || !(*got == test.expected)) return false;
  }
  return true;
}

namespace {

std::vector<ValueKind> derive_input_types(const std::vector<TestCase>& tests) {
  if (tests.empty()) throw InputError("need at least one test case");
  std::vector<ValueKind> types;
  for (const Value& value : tests[0].inputs) types.push_back(value.kind());
  for (const TestCase& test : tests) {
    if (test.inputs.size() != types.size()) {
      throw InputError("test cases disagree on input arity");
    }
    for (std::size_t i = 0; i < types.size(); ++i) {
      if (test.inputs[i].kind() != types[i]) {
        throw InputError("test cases disagree on input types");
      }
    }
  }
  return types;
}

}  // namespace

SynthResult synthesize(const std::vector<TestCase>& tests,
                       const SynthConfig& config) {
  const std::vector<ValueKind> derived = derive_input_types(tests);
  SynthConfig effective = config;
  if (effective.input_types.empty()) {
    effective.input_types = derived;
  } else if (effective.input_types != derived) {
    throw InputError("config input_types do not match the test cases");
  }

  Enumerator enumerator(effective);
  SynthResult result;
  while (Candidate candidate = enumerator.next()) {
    ++result.expansions;
    if (check(candidate, tests)) {
      DIGRAM_CHECK(check(candidate, tests));  // soundness of every solution
      result.found = true;
      result.candidate = candidate;
      result.expression = expression_string(candidate);
      result.depth = candidate->depth;
      result.size = candidate->size;
      return result;
    }
  }
  result.budget_limited = enumerator.budget_exhausted();
  return result;
}

std::uint64_t count_expansions(const std::vector<TestCase>& tests,
                               const SynthConfig& config) {
  return synthesize(tests, config).expansions;
}

}  // namespace digram
