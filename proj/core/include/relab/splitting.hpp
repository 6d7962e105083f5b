/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relab/sequences.hpp"
#include "relab/verdict.hpp"

namespace relab {

/// Certified upper bound on a T-power increment series, with a note on
/// where the certificate came from.
struct TSumEvidence {
  Rational bound;
  std::string provenance;
};

/// The epsilon selected for a split, with the exact inequality that
/// certifies it: eps = 2^-k and bound^v <= 2^(k u) for T = u/v, which is
/// eps^T * bound <= 1 with denominators cleared.
struct EpsilonEvidence {
  Rational epsilon;
  long k = 0;
  TSumEvidence t_sum;
};

/// Picks the largest eps = 2^-k with eps^T * U <= 1, where U is the
/// sequence's certified T-sum upper bound. The inequality is decided by
/// exact exponent algebra, no enclosures. Requires c_0 = 0 and a T-sum
/// certificate; cross-checks the certificate against the first max_terms
/// partial sums at precision prec.
EpsilonEvidence epsilon_search(IncreasingSequence& c_seq, const Temperature& T,
                               std::size_t max_terms, int prec);

/// Outcome of the two-sequence decomposition a = a_0 + sum b_n + q c:
/// b_n = (a_{n+1} - a_n) - q (c_{n+1} - c_n) with q = r * eps, all terms
/// positive, and the telescoped identity checked exactly at every prefix.
struct SplitResult {
  Rational q;
  Rational a0;
  std::vector<Rational> b_terms;     // n < N, each > 0
  std::vector<Rational> residuals;   // a_k - (a_0 + sum_{j<k} b_j + q c_k),
                                     // k = 1..N; exact zeros
  std::size_t identity_checked_to = 0;
  Rational residual;                 // residual at N

  std::optional<DyadicInterval> beta_enclosure;  // a_0 + sum b (+ tail)
  bool beta_nonnegative = false;
};

/// Runs the decomposition for n < N. Positivity of every b_n is a
/// precondition; a violation reports the offending (n, a-increment,
/// q * c-increment) triple. Requires c_0 = 0, r > 0, eps > 0.
SplitResult split_sequences(IncreasingSequence& a_seq,
                            IncreasingSequence& c_seq, const Rational& r,
                            const Rational& eps, std::size_t N, int prec = 64);

/// Per-index verification of the gap condition a_{n+1} - a_n > q d_n plus
/// the interval-level check a_0 > alpha - eps0.
struct GapCheckReport {
  std::vector<std::size_t> violations;  // indices with gap <= q d_n
  TriVerdict a0_above_alpha_minus_eps = TriVerdict::Unknown;
  bool gaps_ok() const { return violations.empty(); }
};

/// Requires q > 0, positive demands, and supplied evidence that
/// sum d_n^T <= 1; refuses to run without the evidence.
GapCheckReport ks_condition_check(IncreasingSequence& a_seq,
                                  const std::vector<Rational>& d_seq,
                                  const Rational& q, const Rational& eps0,
                                  const DyadicInterval& alpha_enclosure,
                                  std::size_t N,
                                  const std::optional<TSumEvidence>& evidence);

/// Best-effort greedy realization of a gap-condition subsequence:
/// n_0 = 0, then for each demand d_k the first later index with
/// a_{n_{k+1}} - a_{n_k} > q d_k. Failure is a report, not an exception:
/// `failed_at` is set when the tail bound certifies no index can ever
/// qualify, `budget_exhausted_at` when the scan gave up inconclusively.
struct GreedyExtractResult {
  std::vector<std::size_t> indices;
  bool complete = false;
  std::optional<std::size_t> failed_at;
  std::optional<std::size_t> budget_exhausted_at;
};

GreedyExtractResult ks_extract(IncreasingSequence& base_seq,
                               const std::vector<Rational>& d_seq,
                               const Rational& q,
                               std::size_t scan_budget = 4096);

}  // namespace relab
