// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#include "digram/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include <json.hpp>

#include "digram/errors.hpp"

namespace digram {

namespace {

using Args = std::span<const Value>;

bool all_ints(const std::vector<Value>& values) {
  return std::all_of(values.begin(), values.end(), [](const Value& v) {
    return v.kind() == ValueKind::Int;
  });
}

// Floor division and matching modulo; 0 divisor is a domain error.
std::optional<Value> floor_div(Args a) {
  if (a[1].as_int() == 0) return std::nullopt;
  BigInt q = a[0].as_int() / a[1].as_int();
  if ((a[0].as_int() % a[1].as_int()) != 0 &&
      ((a[0].as_int() < 0) != (a[1].as_int() < 0))) {
    --q;
  }
  return Value::integer(std::move(q));
}

std::optional<Value> floor_mod(Args a) {
  const std::optional<Value> q = floor_div(a);
  if (!q) return std::nullopt;
  return Value::integer(a[0].as_int() - q->as_int() * a[1].as_int());
}

TypedInstruction unary_int(const char* name,
                           std::function<BigInt(const BigInt&)> fn) {
  return {InstructionId(name),
          {ValueKind::Int},
          ValueKind::Int,
          [fn = std::move(fn)](Args a) -> std::optional<Value> {
            return Value::integer(fn(a[0].as_int()));
          }};
}

TypedInstruction binary_int(
    const char* name, std::function<std::optional<Value>(Args)> fn) {
  return {InstructionId(name), {ValueKind::Int, ValueKind::Int},
          ValueKind::Int, std::move(fn)};
}

std::vector<TypedInstruction> build_dsl() {
  std::vector<TypedInstruction> dsl;

  dsl.push_back(unary_int("succ", [](const BigInt& x) { return x + 1; }));
  dsl.push_back(unary_int("dbl", [](const BigInt& x) { return x * 2; }));
  dsl.push_back(unary_int("neg", [](const BigInt& x) { return -x; }));
  dsl.push_back(unary_int("abs", [](const BigInt& x) {
    return x < 0 ? BigInt(-x) : x;
  }));

  dsl.push_back(binary_int("+", [](Args a) -> std::optional<Value> {
    return Value::integer(a[0].as_int() + a[1].as_int());
  }));
  dsl.push_back(binary_int("-", [](Args a) -> std::optional<Value> {
    return Value::integer(a[0].as_int() - a[1].as_int());
  }));
  dsl.push_back(binary_int("*", [](Args a) -> std::optional<Value> {
    return Value::integer(a[0].as_int() * a[1].as_int());
  }));
  dsl.push_back(binary_int("//", floor_div));
  dsl.push_back(binary_int("%", floor_mod));

  dsl.push_back({InstructionId("len"),
                 {ValueKind::List},
                 ValueKind::Int,
                 [](Args a) -> std::optional<Value> {
                   return Value::integer(BigInt(a[0].as_list().size()));
                 }});
  dsl.push_back({InstructionId("sum"),
                 {ValueKind::List},
                 ValueKind::Int,
                 [](Args a) -> std::optional<Value> {
                   if (!all_ints(a[0].as_list())) return std::nullopt;
                   BigInt total = 0;
                   for (const Value& v : a[0].as_list()) total += v.as_int();
                   return Value::integer(std::move(total));
                 }});
  dsl.push_back({InstructionId("head"),
                 {ValueKind::List},
                 ValueKind::Int,
                 [](Args a) -> std::optional<Value> {
                   const auto& list = a[0].as_list();
                   if (list.empty() || list[0].kind() != ValueKind::Int) {
                     return std::nullopt;
                   }
                   return list[0];
                 }});
  dsl.push_back({InstructionId("sorted"),
                 {ValueKind::List},
                 ValueKind::List,
                 [](Args a) -> std::optional<Value> {
                   std::vector<Value> out = a[0].as_list();
                   std::sort(out.begin(), out.end());
                   return Value::list(std::move(out));
                 }});
  dsl.push_back({InstructionId("reversed"),
                 {ValueKind::List},
                 ValueKind::List,
                 [](Args a) -> std::optional<Value> {
                   std::vector<Value> out = a[0].as_list();
                   std::reverse(out.begin(), out.end());
                   return Value::list(std::move(out));
                 }});
  dsl.push_back({InstructionId("tail"),
                 {ValueKind::List},
                 ValueKind::List,
                 [](Args a) -> std::optional<Value> {
                   const auto& list = a[0].as_list();
                   if (list.empty()) return std::nullopt;
                   return Value::list(
                       std::vector<Value>(list.begin() + 1, list.end()));
                 }});
  dsl.push_back({InstructionId("cons"),
                 {ValueKind::Int, ValueKind::List},
                 ValueKind::List,
                 [](Args a) -> std::optional<Value> {
                   std::vector<Value> out;
                   out.reserve(a[1].as_list().size() + 1);
                   out.push_back(a[0]);
                   out.insert(out.end(), a[1].as_list().begin(),
                              a[1].as_list().end());
                   return Value::list(std::move(out));
                 }});

  dsl.push_back({InstructionId("concat"),
                 {ValueKind::Str, ValueKind::Str},
                 ValueKind::Str,
                 [](Args a) -> std::optional<Value> {
                   return Value::str(a[0].as_str() + a[1].as_str());
                 }});
  dsl.push_back({InstructionId("upper"),
                 {ValueKind::Str},
                 ValueKind::Str,
                 [](Args a) -> std::optional<Value> {
                   std::string out = a[0].as_str();
                   for (char& c : out) {
                     c = static_cast<char>(
                         std::toupper(static_cast<unsigned char>(c)));
                   }
                   return Value::str(std::move(out));
                 }});
  dsl.push_back({InstructionId("lower"),
                 {ValueKind::Str},
                 ValueKind::Str,
                 [](Args a) -> std::optional<Value> {
                   std::string out = a[0].as_str();
                   for (char& c : out) {
                     c = static_cast<char>(
                         std::tolower(static_cast<unsigned char>(c)));
                   }
                   return Value::str(std::move(out));
                 }});
  dsl.push_back({InstructionId("strip"),
                 {ValueKind::Str},
                 ValueKind::Str,
                 [](Args a) -> std::optional<Value> {
                   const std::string& s = a[0].as_str();
                   std::size_t b = s.find_first_not_of(" \t\n\r");
                   if (b == std::string::npos) return Value::str("");
                   std::size_t e = s.find_last_not_of(" \t\n\r");
                   return Value::str(s.substr(b, e - b + 1));
                 }});
  dsl.push_back({InstructionId("strlen"),
                 {ValueKind::Str},
                 ValueKind::Int,
                 [](Args a) -> std::optional<Value> {
                   return Value::integer(BigInt(a[0].as_str().size()));
                 }});

  dsl.push_back({InstructionId("=="),
                 {ValueKind::Int, ValueKind::Int},
                 ValueKind::Bool,
                 [](Args a) -> std::optional<Value> {
                   return Value::boolean(a[0].as_int() == a[1].as_int());
                 }});
  dsl.push_back({InstructionId("is_even"),
                 {ValueKind::Int},
                 ValueKind::Bool,
                 [](Args a) -> std::optional<Value> {
                   return Value::boolean(a[0].as_int() % 2 == 0);
                 }});

  return dsl;
}

}  // namespace

const std::vector<TypedInstruction>& default_dsl() {
  static const std::vector<TypedInstruction> dsl = build_dsl();
  return dsl;
}

std::vector<TypedInstruction> dsl_subset(
    const std::vector<std::string>& names) {
  std::vector<TypedInstruction> out;
  for (const std::string& name : names) {
    const auto it = std::find_if(
        default_dsl().begin(), default_dsl().end(),
        [&](const TypedInstruction& i) { return i.id.str() == name; });
    if (it == default_dsl().end()) {
      throw InputError("unknown DSL instruction '" + name + "'");
    }
    out.push_back(*it);
  }
  return out;
}

namespace {

Value value_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return Value::integer(BigInt(j.get<long long>()));
  if (j.is_boolean()) return Value::boolean(j.get<bool>());
  if (j.is_string()) return Value::str(j.get<std::string>());
  if (j.is_array()) {
    std::vector<Value> elems;
    for (const nlohmann::json& e : j) {
      elems.push_back(value_from_json(e, where));
    }
    return Value::list(std::move(elems));
  }
  throw InputError(where + ": unsupported value " + j.dump());
}

}  // namespace

std::vector<SynthTask> load_tasks(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read task file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  if (!doc.is_array()) {
    throw InputError(path + ": expected a top-level array of tasks");
  }

  std::vector<SynthTask> tasks;
  for (const nlohmann::json& record : doc) {
    SynthTask task;
    if (!record.contains("id") || !record["id"].is_string()) {
      throw InputError(path + ": task without string 'id'");
    }
    task.id = record["id"].get<std::string>();
    const std::string where = path + ": task '" + task.id + "'";
    if (!record.contains("tests") || !record["tests"].is_array() ||
        record["tests"].empty()) {
      throw InputError(where + " needs a non-empty 'tests' array");
    }
    for (const nlohmann::json& t : record["tests"]) {
      if (!t.contains("inputs") || !t["inputs"].is_array() ||
          !t.contains("expected")) {
        throw InputError(where + ": each test needs 'inputs' and 'expected'");
      }
      TestCase test;
      for (const nlohmann::json& input : t["inputs"]) {
        test.inputs.push_back(value_from_json(input, where));
      }
      test.expected = value_from_json(t["expected"], where);
      task.tests.push_back(std::move(test));
    }
    if (record.contains("instructions")) {
      for (const nlohmann::json& name : record["instructions"]) {
        if (!name.is_string()) {
          throw InputError(where + ": 'instructions' must be names");
        }
        task.instructions.push_back(name.get<std::string>());
      }
    }
    if (record.contains("max_depth")) {
      if (!record["max_depth"].is_number_integer()) {
        throw InputError(where + ": 'max_depth' must be an integer");
      }
      task.max_depth = record["max_depth"].get<int>();
    }
    tasks.push_back(std::move(task));
  }
  return tasks;
}

}  // namespace digram
