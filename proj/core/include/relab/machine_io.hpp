/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#pragma once

#include <iosfwd>
#include <string>

#include "relab/machine.hpp"

namespace relab {

/// Machine spec text format, one entry per line:
///
///   # comment
///   machine <id>
///   <program> <output> [steps]
///
/// `-` stands for the empty string on either side; steps defaults to 1.
/// Malformed lines, prefix violations, and Kraft violations are rejected
/// with the offending entry echoed.
PrefixMachine parse_machine_spec(std::istream& in,
                                 const std::string& source_name = "<input>");
PrefixMachine load_machine_spec(const std::string& path);

std::string machine_spec_text(const PrefixMachine& machine);

}  // namespace relab
