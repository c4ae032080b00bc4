// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#include "digram/bigint.hpp"

#include <cmath>

#include "digram/errors.hpp"

namespace digram {

double log10_approx(const BigInt& value) {
  DIGRAM_CHECK(value > 0);
  const std::string digits = value.str();
  // log10(d.ddd... * 10^(n-1)) from the leading 17 significant digits.
  const std::size_t lead = std::min<std::size_t>(digits.size(), 17);
  const double mantissa = std::stod(digits.substr(0, lead));
  return std::log10(mantissa) +
         static_cast<double>(digits.size() - lead);
}

std::string to_decimal(const BigInt& value) { return value.str(); }

}  // namespace digram
