// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIGRAM_ERRORS_HPP_
#define DIGRAM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace digram {

// Bad user input: missing paths, malformed files, invalid arguments.
// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed data file. Carries the offending path and 1-based line number.
class FormatError : public InputError {
 public:
  FormatError(const std::string& path, int line, const std::string& what)
      : InputError(path + ":" + std::to_string(line) + ": " + what),
        path_(path),
        line_(line) {}

  const std::string& path() const noexcept { return path_; }
  int line() const noexcept { return line_; }

 private:
  std::string path_;
  int line_;
};

// Internal invariant violation. The CLI maps this to exit code 3.
[[noreturn]] void internal_failure(const char* expr, const char* file, int line);

}  // namespace digram

#define DIGRAM_CHECK(cond)                                   \
  do {                                                       \
    if (!(cond)) {                                           \
      ::digram::internal_failure(#cond, __FILE__, __LINE__); \
    }                                                        \
  } while (0)

#endif  // DIGRAM_ERRORS_HPP_
