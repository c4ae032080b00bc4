// Copyright 2026 The digram authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIGRAM_BIGINT_HPP_
#define DIGRAM_BIGINT_HPP_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace digram {

// Search-space totals like 200^20 overflow any machine word, so every node
// count in the space model is an exact arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

// log10 of a positive BigInt, accurate to well below the 1e-6 we print.
double log10_approx(const BigInt& value);

std::string to_decimal(const BigInt& value);

}  // namespace digram

#endif  // DIGRAM_BIGINT_HPP_
