/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#pragma once

#include <string_view>

namespace relab {

/// Three-valued outcome of an interval-level comparison. Unknown means the
/// enclosures overlap; it may resolve either way at higher precision, the
/// other two verdicts never flip.
enum class TriVerdict { Holds, Fails, Unknown };

constexpr std::string_view to_string(TriVerdict v) {
  switch (v) {
    case TriVerdict::Holds: return "holds";
    case TriVerdict::Fails: return "fails";
    default: return "unknown";
  }
}

}  // namespace relab
