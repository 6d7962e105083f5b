/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#include "relab/splitting.hpp"

namespace relab {

namespace {

// eps^T * bound <= 1 for eps = 2^-k, T = u/v, cleared to bound^v <= 2^(k u).
bool epsilon_inequality_holds(long k, const Temperature& T,
                              const Rational& bound) {
  if (!bound.is_positive()) return true;
  long u = T.value().numerator().get_si();
  long v = T.value().denominator().get_si();
  Rational lhs = bound.pow_int(v);
  Rational rhs = pow2(k * u);
  return lhs <= rhs;
}

}  // namespace

EpsilonEvidence epsilon_search(IncreasingSequence& c_seq, const Temperature& T,
                               std::size_t max_terms, int prec) {
  if (!c_seq.term(0).is_zero()) {
    throw Error("epsilon_search: sequence '" + c_seq.name() +
                "' must start at 0, got c_0 = " + c_seq.term(0).str());
  }
  auto bound = c_seq.certified_t_sum_upper(T);
  if (!bound) {
    throw UnsupportedError("epsilon_search: no certified T-sum bound for '" +
                           c_seq.name() + "' at T = " + T.value().str());
  }
  if (max_terms >= 1) {
    // The certificate must dominate every partial sum it claims to cover.
    TSumReport partial = t_sum_partial(c_seq, T, max_terms, prec);
    if (partial.partial_sum.lo_rational() > *bound) {
      throw Error("epsilon_search: certificate " + bound->str() +
                  " is below the observed partial sum; the closed form for '" +
                  c_seq.name() + "' is wrong");
    }
  }
  long k = 0;
  while (!epsilon_inequality_holds(k, T, *bound)) ++k;
  return EpsilonEvidence{pow2(-k), k,
                         TSumEvidence{*bound, "closed-form T-sum bound for " +
                                                  c_seq.name()}};
}

SplitResult split_sequences(IncreasingSequence& a_seq,
                            IncreasingSequence& c_seq, const Rational& r,
                            const Rational& eps, std::size_t N, int prec) {
  if (N < 1) throw Error("split_sequences: N must be >= 1");
  if (!r.is_positive()) throw Error("split_sequences: r must be positive");
  if (!eps.is_positive()) throw Error("split_sequences: eps must be positive");
  if (!c_seq.term(0).is_zero()) {
    throw Error("split_sequences: c_0 must be 0, got " + c_seq.term(0).str());
  }

  SplitResult result;
  result.q = r * eps;
  result.a0 = a_seq.term(0);
  result.identity_checked_to = N;

  Rational b_sum(0);
  for (std::size_t n = 0; n < N; ++n) {
    Rational da = a_seq.increment(n);
    Rational qdc = result.q * c_seq.increment(n);
    Rational b = da - qdc;
    if (!b.is_positive()) {
      throw PositivityError(
          n, "split_sequences: b_" + std::to_string(n) +
                 " is not positive: a-increment " + da.str() +
                 " <= q * c-increment " + qdc.str());
    }
    b_sum += b;
    result.b_terms.push_back(std::move(b));
    std::size_t k = n + 1;
    Rational residual = a_seq.term(k) -
                        (result.a0 + b_sum +
                         result.q * (c_seq.term(k) - c_seq.term(0)));
    result.residuals.push_back(residual);
  }
  result.residual = result.residuals.back();

  Rational beta_lo = result.a0 + b_sum;
  result.beta_nonnegative = beta_lo >= Rational(0);
  if (a_seq.has_tail_bound()) {
    // sum_{n>=N} b_n lies in (0, alpha - a_N], so beta = a_0 + sum b is
    // within tail_a(N) above the finite part.
    result.beta_enclosure = DyadicInterval::enclose(
        beta_lo, beta_lo + a_seq.tail_bound(N), prec);
  }
  return result;
}

GapCheckReport ks_condition_check(IncreasingSequence& a_seq,
                                  const std::vector<Rational>& d_seq,
                                  const Rational& q, const Rational& eps0,
                                  const DyadicInterval& alpha_enclosure,
                                  std::size_t N,
                                  const std::optional<TSumEvidence>& evidence) {
  if (!q.is_positive()) throw Error("ks_condition_check: q must be positive");
  if (!evidence) {
    throw Error("ks_condition_check: rejected, no certified evidence that "
                "the demand T-power series is bounded by 1");
  }
  if (evidence->bound > Rational(1)) {
    throw Error("ks_condition_check: rejected, supplied evidence bound " +
                evidence->bound.str() + " exceeds 1");
  }
  if (d_seq.size() < N) {
    throw Error("ks_condition_check: only " + std::to_string(d_seq.size()) +
                " demands supplied for N = " + std::to_string(N));
  }
  GapCheckReport report;
  for (std::size_t n = 0; n < N; ++n) {
    if (!d_seq[n].is_positive()) {
      throw Error("ks_condition_check: demand d_" + std::to_string(n) +
                  " must be positive");
    }
    if (!(a_seq.increment(n) > q * d_seq[n])) {
      report.violations.push_back(n);
    }
  }
  const Rational a0 = a_seq.term(0);
  if (a0 > alpha_enclosure.hi_rational() - eps0) {
    report.a0_above_alpha_minus_eps = TriVerdict::Holds;
  } else if (a0 <= alpha_enclosure.lo_rational() - eps0) {
    report.a0_above_alpha_minus_eps = TriVerdict::Fails;
  } else {
    report.a0_above_alpha_minus_eps = TriVerdict::Unknown;
  }
  return report;
}

GreedyExtractResult ks_extract(IncreasingSequence& base_seq,
                               const std::vector<Rational>& d_seq,
                               const Rational& q, std::size_t scan_budget) {
  if (!q.is_positive()) throw Error("ks_extract: q must be positive");
  GreedyExtractResult result;
  result.indices.push_back(0);
  std::size_t last = 0;
  Rational a_last = base_seq.term(0);
  for (std::size_t k = 0; k < d_seq.size(); ++k) {
    Rational target = q * d_seq[k];
    bool found = false;
    std::size_t limit = last + scan_budget;
    if (auto len = base_seq.length()) {
      limit = std::min(limit, *len > 0 ? *len - 1 : 0);
    }
    for (std::size_t m = last + 1; m <= limit; ++m) {
      Rational gap = base_seq.term(m) - a_last;
      if (gap > target) {
        result.indices.push_back(m);
        last = m;
        a_last = base_seq.term(m);
        found = true;
        break;
      }
      // Certified dead end: every future gap is below (a_m - a_last) plus
      // the tail above a_m.
      if (base_seq.has_tail_bound() &&
          gap + base_seq.tail_bound(m) <= target) {
        result.failed_at = k;
        return result;
      }
    }
    if (!found) {
      result.budget_exhausted_at = k;
      return result;
    }
  }
  result.complete = true;
  return result;
}

}  // namespace relab
