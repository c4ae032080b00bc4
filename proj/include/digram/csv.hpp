// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIGRAM_CSV_HPP_
#define DIGRAM_CSV_HPP_

#include <string>
#include <vector>

namespace digram {

// Quotes a field iff it contains a separator, quote or newline.
std::string csv_escape(const std::string& field);

// Splits one CSV line, honoring double-quoted fields with "" escapes.
// Returns false on malformed quoting.
bool csv_split(const std::string& line, std::vector<std::string>* fields);

}  // namespace digram

#endif  // DIGRAM_CSV_HPP_
