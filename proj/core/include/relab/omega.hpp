/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relab/machine.hpp"
#include "relab/sequences.hpp"

namespace relab {

struct OmegaTraceRow {
  std::size_t index = 0;          // discovery index
  std::size_t program_length = 0;
  Rational lower_bound;           // cumulative certified lower bound
  Rational term_width;            // width of this term's enclosure, 0 if exact
};

/// Certified approximation of the T-weighted halting sum
/// sum over the domain of 2^(-|p|/T).
struct OmegaApproximation {
  std::string machine_id;
  Rational temperature;
  int prec = 0;
  std::uint64_t budget = 0;

  /// One strictly increasing exact rational per enumeration event, each a
  /// lower bound of the partial sum up to that event; all <= 1.
  std::vector<Rational> lower_bounds;
  std::vector<OmegaTraceRow> trace;

  /// Set when the full declared domain fell inside the budget.
  std::optional<DyadicInterval> enclosure;
  /// Set when additionally every term was exact (integer exponents); the
  /// sum is then the value itself.
  std::optional<Rational> exact_total;

  bool fully_enumerated = false;
};

/// Lower approximation of the halting sum at temperature T in (0, 1].
/// Each term 2^(-|p_i|/T) is rounded down at precision prec + i (plus a
/// magnitude adjustment that keeps every rounded term positive), so the
/// bound list is strictly increasing. T > 1 is a divergent parameter and
/// T <= 0 is rejected; both are hard errors.
OmegaApproximation omega_lower(const PrefixMachine& machine, const Rational& T,
                               std::uint64_t budget, int prec);

/// The T-convergence evidence for the halting-sum sequence: increment i is
/// 2^(-|p_i|/T), whose T-th power has exponent (-|p_i|/T)*T = -|p_i| by
/// exact exponent arithmetic, so the increment T-power sum equals the
/// enumerated Kraft mass exactly and is <= 1. No intervals are involved.
TSumReport omega_t_convergence_report(const PrefixMachine& machine,
                                      const Rational& T, std::uint64_t budget,
                                      int prec);

struct MPowerReport {
  std::string machine_id;
  Rational temperature;
  int lmax = 0;

  /// One entry per enumeration event: a certified lower bound of
  /// sum over discovered outputs s of 2^(-H(s)/T), H taken as the
  /// shortest program seen so far (programs longer than lmax ignored).
  /// Non-decreasing, and pointwise <= the omega_lower bound at the same
  /// event.
  std::vector<Rational> bounds;

  /// Discovered outputs with their current best program length, in first
  /// discovery order.
  std::vector<std::pair<Bits, int>> best_lengths;

  /// Exact value of the final bound when every contributing term was
  /// exact (always the case at integer -|p|/T, e.g. T = 1).
  std::optional<Rational> exact_final;
};

/// Lower bounds of the output-weighted sum using shortest programs only;
/// the finite surrogate of summing a universal probability to the 1/T.
MPowerReport sum_m_power(const PrefixMachine& machine, const Rational& T,
                         std::uint64_t budget, int lmax, int prec);

/// The halting-sum lower bounds as an increasing sequence: a_0 = 0,
/// a_{k+1} = k-th bound. Carries a tail bound when the domain was fully
/// enumerated, and a T'-sum certificate (the enumerated Kraft mass) valid
/// for every T' >= T.
IncreasingSequence omega_sequence(const PrefixMachine& machine,
                                  const Rational& T, std::uint64_t budget,
                                  int prec);

}  // namespace relab
