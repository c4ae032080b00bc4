// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#include "digram/errors.hpp"

namespace digram {

void internal_failure(const char* expr, const char* file, int line) {
  throw std::logic_error(std::string("internal invariant violated: ") + expr +
                         " at " + file + ":" + std::to_string(line));
}

}  // namespace digram
