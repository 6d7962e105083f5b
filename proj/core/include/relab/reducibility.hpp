/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relab/randomness.hpp"
#include "relab/sequences.hpp"
#include "relab/verdict.hpp"

namespace relab {

/// Domination is checked at the instance level: concrete sequences with
/// enclosures of their declared limits, never the bare reals (the
/// existential over sequences is not searchable).
struct DominationInstance {
  IncreasingSequence& a_seq;
  IncreasingSequence& b_seq;
  std::optional<DyadicInterval> alpha_enclosure;
  std::optional<DyadicInterval> beta_enclosure;
  unsigned long c = 1;
};

/// Verdicts for c(alpha - a_n) >= beta - b_n at n = 0..N inclusive.
/// Holds and Fails are certified against the enclosure endpoints; Unknown
/// means the enclosures overlap and may resolve at higher precision.
/// Missing enclosures are unsupported.
std::vector<TriVerdict> domination_check(DominationInstance& inst,
                                         std::size_t N);

/// Smallest c in [1, c_max] whose verdicts hold at every index 0..N, found
/// by intersecting the exact per-index constraints on c; empty when no
/// such c exists below c_max.
std::optional<unsigned long> find_domination_constant(
    IncreasingSequence& a_seq, IncreasingSequence& b_seq,
    const DyadicInterval& alpha_enclosure,
    const DyadicInterval& beta_enclosure, std::size_t N, unsigned long c_max);

/// A named family member for likeness/universality sweeps, carrying its
/// T-convergence evidence.
struct FamilyMember {
  std::string name;
  IncreasingSequence* seq = nullptr;
  std::optional<DyadicInterval> enclosure;
  std::optional<TSumReport> t_evidence;
};

struct DominationRow {
  std::string member;
  bool evidence_ok = false;
  std::string reject_reason;
  std::optional<unsigned long> constant;
};

/// Evidence that alpha dominates each declared family member: the
/// domination-constant search against every member whose T-convergence
/// evidence is in order. This is evidence against a finite family, never a
/// proof of the likeness definition, which quantifies over all r.e.
/// T-convergent reals.
std::vector<DominationRow> omega_t_likeness_check(
    IncreasingSequence& alpha_seq, const DyadicInterval& alpha_enclosure,
    std::vector<FamilyMember>& family, std::size_t N, unsigned long c_max);

/// Sequence-level variant: the same instance checks, read as evidence for
/// the universality of the sequence itself rather than of its limit.
std::vector<DominationRow> t_universality_check(
    IncreasingSequence& a_seq, const DyadicInterval& alpha_enclosure,
    std::vector<FamilyMember>& family, std::size_t N, unsigned long c_max);

struct SolovayRow {
  std::size_t n = 0;
  std::optional<int> h_alpha;
  std::optional<int> h_beta;
  std::optional<int> difference;  // H(beta prefix) - H(alpha prefix)
};

/// Descriptive difference table H(beta, n) - H(alpha, n) on one machine;
/// entries are Unknown wherever either search came up empty. No verdict is
/// attached.
std::vector<SolovayRow> solovay_empirical(const PrefixMachine& machine,
                                          const BitSource& alpha,
                                          const BitSource& beta,
                                          std::size_t nmax, int lmax,
                                          int workers = 1);

}  // namespace relab
