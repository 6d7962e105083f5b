/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#include "relab/reducibility.hpp"

namespace relab {

std::vector<TriVerdict> domination_check(DominationInstance& inst,
                                         std::size_t N) {
  if (N < 1) throw Error("domination_check: N must be >= 1");
  if (!inst.alpha_enclosure || !inst.beta_enclosure) {
    throw UnsupportedError("domination_check: both limits need enclosures");
  }
  const Rational alpha_lo = inst.alpha_enclosure->lo_rational();
  const Rational alpha_hi = inst.alpha_enclosure->hi_rational();
  const Rational beta_lo = inst.beta_enclosure->lo_rational();
  const Rational beta_hi = inst.beta_enclosure->hi_rational();
  const Rational c(Int(static_cast<unsigned long>(inst.c)));

  std::vector<TriVerdict> verdicts;
  verdicts.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    const Rational a_n = inst.a_seq.term(n);
    const Rational b_n = inst.b_seq.term(n);
    // c(alpha - a_n) ranges over [c(alpha_lo - a_n), c(alpha_hi - a_n)],
    // beta - b_n over [beta_lo - b_n, beta_hi - b_n]; all endpoints exact.
    if (c * (alpha_lo - a_n) >= beta_hi - b_n) {
      verdicts.push_back(TriVerdict::Holds);
    } else if (c * (alpha_hi - a_n) < beta_lo - b_n) {
      verdicts.push_back(TriVerdict::Fails);
    } else {
      verdicts.push_back(TriVerdict::Unknown);
    }
  }
  return verdicts;
}

std::optional<unsigned long> find_domination_constant(
    IncreasingSequence& a_seq, IncreasingSequence& b_seq,
    const DyadicInterval& alpha_enclosure,
    const DyadicInterval& beta_enclosure, std::size_t N, unsigned long c_max) {
  if (c_max < 1) throw Error("find_domination_constant: c_max must be >= 1");
  const Rational alpha_lo = alpha_enclosure.lo_rational();
  const Rational beta_hi = beta_enclosure.hi_rational();

  // The certified Holds predicate is c * (alpha_lo - a_n) >= beta_hi - b_n,
  // a linear constraint on c per index; intersect them exactly.
  Int c_lo(1);
  Int c_hi(static_cast<unsigned long>(c_max));
  for (std::size_t n = 0; n <= N; ++n) {
    const Rational gap_a = alpha_lo - a_seq.term(n);
    const Rational gap_b = beta_hi - b_seq.term(n);
    if (gap_a.is_positive()) {
      Int need = (gap_b / gap_a).ceil();
      if (cmp(need, c_lo) > 0) c_lo = need;
    } else if (gap_a.is_zero()) {
      if (gap_b.is_positive()) return std::nullopt;
    } else {
      // Negative left gap: larger c only hurts, the constraint is an
      // upper bound (or infeasible when the right side is positive).
      if (gap_b.is_positive()) return std::nullopt;
      Int cap = (gap_b / gap_a).floor();
      if (cmp(cap, c_hi) < 0) c_hi = cap;
    }
    if (cmp(c_lo, c_hi) > 0) return std::nullopt;
  }
  return c_lo.get_ui();
}

namespace {

std::vector<DominationRow> family_sweep(IncreasingSequence& alpha_seq,
                                        const DyadicInterval& alpha_enclosure,
                                        std::vector<FamilyMember>& family,
                                        std::size_t N, unsigned long c_max) {
  std::vector<DominationRow> rows;
  for (auto& member : family) {
    DominationRow row;
    row.member = member.name;
    if (member.seq == nullptr) {
      row.reject_reason = "no sequence supplied";
    } else if (!member.enclosure) {
      row.reject_reason = "no limit enclosure supplied";
    } else if (!member.t_evidence) {
      row.reject_reason = "no T-convergence evidence supplied";
    } else if (member.t_evidence->exceeded()) {
      row.reject_reason = "T-convergence evidence reports an exceeded bound";
    } else {
      row.evidence_ok = true;
      row.constant = find_domination_constant(
          alpha_seq, *member.seq, alpha_enclosure, *member.enclosure, N,
          c_max);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<DominationRow> omega_t_likeness_check(
    IncreasingSequence& alpha_seq, const DyadicInterval& alpha_enclosure,
    std::vector<FamilyMember>& family, std::size_t N, unsigned long c_max) {
  return family_sweep(alpha_seq, alpha_enclosure, family, N, c_max);
}

std::vector<DominationRow> t_universality_check(
    IncreasingSequence& a_seq, const DyadicInterval& alpha_enclosure,
    std::vector<FamilyMember>& family, std::size_t N, unsigned long c_max) {
  return family_sweep(a_seq, alpha_enclosure, family, N, c_max);
}

std::vector<SolovayRow> solovay_empirical(const PrefixMachine& machine,
                                          const BitSource& alpha,
                                          const BitSource& beta,
                                          std::size_t nmax, int lmax,
                                          int workers) {
  ComplexityProfile pa = complexity_profile(machine, alpha, nmax, lmax, workers);
  ComplexityProfile pb = complexity_profile(machine, beta, nmax, lmax, workers);
  std::vector<SolovayRow> rows;
  for (std::size_t n = 1; n <= nmax; ++n) {
    SolovayRow row;
    row.n = n;
    auto ia = pa.entries.find(n);
    auto ib = pb.entries.find(n);
    if (ia != pa.entries.end()) row.h_alpha = ia->second;
    if (ib != pb.entries.end()) row.h_beta = ib->second;
    if (row.h_alpha && row.h_beta) {
      row.difference = *row.h_beta - *row.h_alpha;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace relab
