/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested value or mode of operation the artifact does not support
// (e.g. an enclosure of a limit without a tail bound).
struct UnsupportedError : Error {
  using Error::Error;
};

// Raised when a sum is requested at a parameter where it provably diverges
// (exponent base 2^{-|p|/T} with T > 1).
struct DivergentParameterError : Error {
  using Error::Error;
};

// A sequence materialized a term that is not strictly greater than its
// predecessor. `index` is the offending position (the later of the pair).
struct MonotonicityError : Error {
  std::size_t index;
  MonotonicityError(std::size_t idx, const std::string& what)
      : Error(what), index(idx) {}
};

// Positivity of a constructed term failed; carries the violating index.
struct PositivityError : Error {
  std::size_t index;
  PositivityError(std::size_t idx, const std::string& what)
      : Error(what), index(idx) {}
};

// Malformed external input (machine spec file, ML test file, family spec).
// The message echoes the offending entry.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace relab
