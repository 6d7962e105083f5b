/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "relab/rational.hpp"

namespace relab {

/// Binary strings over '0'/'1'; the empty string is the empty program.
using Bits = std::string;

bool is_valid_bits(const Bits& s);

/// True when p is a proper prefix of s.
bool is_proper_prefix(const Bits& p, const Bits& s);

/// Canonical program order: by length, then lexicographically.
bool canonical_less(const Bits& a, const Bits& b);

struct PrefixViolation {
  Bits prefix;
  Bits extension;
};

/// Empty result means the set is prefix-free; otherwise the
/// lexicographically first violating (prefix, extension) pair.
std::optional<PrefixViolation> check_prefix_free(std::vector<Bits> programs);

struct KraftResult {
  Rational sum;
  bool ok;  // sum <= 1
};

/// Exact Kraft sum over a prefix-free program set. A prefix violation in
/// the input is a hard error carrying the offending pair.
KraftResult kraft_check(const std::vector<Bits>& programs);

struct MachineEntry {
  Bits program;
  Bits output;
  std::uint64_t steps = 1;  // declared halting step count, >= 1
};

/// A prefix-free machine: a finite map from programs to outputs, each
/// with a declared step count (table machines halt in one step). The
/// domain is checked prefix-free and its exact Kraft sum checked <= 1 at
/// construction; either violation is a hard error. Immutable once built.
class PrefixMachine {
 public:
  /// All steps = 1.
  static PrefixMachine table(
      std::string id, const std::vector<std::pair<Bits, Bits>>& entries);
  /// Explicit per-entry step counts.
  static PrefixMachine with_schedule(std::string id,
                                     std::vector<MachineEntry> entries);

  const std::string& id() const { return id_; }
  const std::vector<MachineEntry>& entries() const { return entries_; }
  const Rational& kraft_sum() const { return kraft_; }

  std::optional<Bits> run(const Bits& program) const;

  /// Entry index for a program of length <= 63 packed as (length, value);
  /// the numeric fast path for exhaustive searches.
  std::optional<std::size_t> lookup_numeric(int length,
                                            std::uint64_t value) const;

 private:
  PrefixMachine(std::string id, std::vector<MachineEntry> entries);

  std::string id_;
  std::vector<MachineEntry> entries_;
  std::unordered_map<Bits, std::size_t> by_program_;
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> by_value_;
  Rational kraft_;
};

/// Header construction: U(0^i 1 p) = C_i(p) for the i-th member of the
/// ordered family, so every member program embeds with overhead exactly
/// i + 1. The result is prefix-free because the headers self-delimit.
/// Declared step counts become i + 1 + member steps.
PrefixMachine build_universal(std::string id,
                              const std::vector<const PrefixMachine*>& family);

struct EnumerationEvent {
  Bits program;
  Bits output;
  std::size_t discovery_index = 0;
  std::uint64_t steps = 1;
  std::uint64_t first_round = 1;  // dovetail round where the halt surfaced
  std::string machine_id;
};

/// Deterministic dovetailed enumeration: round k runs every declared
/// program of index < k for k steps, so entry j surfaces in round
/// max(j + 1, steps_j). Events are listed by (first_round, steps, length,
/// lexicographic); exactly the programs with first_round <= budget appear.
std::vector<EnumerationEvent> enumerate_domain(const PrefixMachine& machine,
                                               std::uint64_t budget);

/// min{ |p| : machine(p) = s, |p| <= lmax } by exhaustive search over all
/// 2^(lmax+1) candidate programs, shortest first; empty if none produces s.
/// The candidate space is partitioned across `workers`; results merge by
/// (length, lexicographic) order, so the answer is worker-count
/// independent.
std::optional<int> brute_force_H(const PrefixMachine& machine, const Bits& s,
                                 int lmax, int workers = 1);

/// Finite table n -> H(first n bits) produced by exhaustive search.
/// A missing key means the source could not supply those bits; a present
/// key with empty value means the search exhausted its budget (Unknown).
struct ComplexityProfile {
  std::string subject;
  std::string machine_id;
  int search_limit = 0;
  std::map<std::size_t, std::optional<int>> entries;
};

}  // namespace relab
