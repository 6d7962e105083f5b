/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "relab/dyadic.hpp"
#include "relab/rational.hpp"

namespace relab {

/// A computable, strictly increasing sequence of rationals, materialized
/// lazily into a cache. Strictness is checked on materialization; a
/// violation aborts with the offending index.
///
/// Optional attachments:
///  - tail bound: n -> certified upper bound on (limit - a_n),
///  - T-sum certificate: T -> certified upper bound on the full series
///    sum of (a_{n+1} - a_n)^T, when the family has one in closed form,
///  - finite length, for machine-driven sequences that stop at a budget.
///
/// A single instance is confined to one worker at a time (materialization
/// mutates the cache); distinct instances are independent.
class IncreasingSequence {
 public:
  using Generator = std::function<Rational(std::size_t)>;
  using TailBound = std::function<Rational(std::size_t)>;
  using TSumCertificate =
      std::function<std::optional<Rational>(const Temperature&)>;

  IncreasingSequence(std::string name, Generator gen)
      : name_(std::move(name)), gen_(std::move(gen)) {}

  // Generators may keep incremental state keyed to in-order calls, so
  // instances do not share well; move-only.
  IncreasingSequence(const IncreasingSequence&) = delete;
  IncreasingSequence& operator=(const IncreasingSequence&) = delete;
  IncreasingSequence(IncreasingSequence&&) = default;
  IncreasingSequence& operator=(IncreasingSequence&&) = default;

  IncreasingSequence& with_tail_bound(TailBound tb);
  IncreasingSequence& with_length(std::size_t len);
  IncreasingSequence& with_t_sum_certificate(TSumCertificate cert);
  IncreasingSequence& with_exact_limit(Rational limit);

  const std::string& name() const { return name_; }

  /// a_n; materializes the prefix through n. Returns a copy: the cache can
  /// reallocate on later materializations.
  Rational term(std::size_t n);
  /// a_{n+1} - a_n, guaranteed positive.
  Rational increment(std::size_t n);

  std::size_t materialized() const { return cache_.size(); }
  std::optional<std::size_t> length() const { return length_; }

  bool has_tail_bound() const { return tail_.has_value(); }
  Rational tail_bound(std::size_t n) const;

  bool has_t_sum_certificate() const { return cert_.has_value(); }
  std::optional<Rational> certified_t_sum_upper(const Temperature& T) const;

  /// The limit, when the family knows it in closed form.
  const std::optional<Rational>& exact_limit() const { return exact_limit_; }

 private:
  std::string name_;
  Generator gen_;
  std::optional<TailBound> tail_;
  std::optional<TSumCertificate> cert_;
  std::optional<std::size_t> length_;
  std::optional<Rational> exact_limit_;
  std::vector<Rational> cache_;
};

/// a_n = L(1 - rho^n) with L > 0, 0 < rho < 1. Increments L(1-rho)rho^n,
/// limit L, exact tail bound L rho^n, closed-form T-sum certificate.
IncreasingSequence geometric_sequence(const Rational& limit,
                                      const Rational& rho);

/// a_0 = 0, increments (n+1)^-s for integer s >= 1. For s >= 2 carries the
/// integral-test tail bound; certificate available whenever sT > 1.
IncreasingSequence powerlaw_sequence(long s);

/// Partial T-power sums of a sequence's increments.
struct TSumReport {
  enum class Verdict { BoundedSoFar, ExceededBound };

  DyadicInterval partial_sum;            // encloses sum_{n<N} (a_{n+1}-a_n)^T
  std::optional<Rational> exact_sum;     // set when every term was exact
  std::size_t terms_used = 0;
  Verdict verdict = Verdict::BoundedSoFar;
  std::optional<Rational> bound;         // the B a probe compared against
  std::optional<std::size_t> exceeded_at;  // term count when exceedance was certified

  bool exceeded() const { return verdict == Verdict::ExceededBound; }
};

/// Enclosure of sum_{n<N} (a_{n+1}-a_n)^T, width <= N * 2^-prec. Terms whose
/// T-th power is rational are accumulated exactly; at T = 1 the whole sum
/// telescopes to a_N - a_0 and exact_sum reports it.
TSumReport t_sum_partial(IncreasingSequence& seq, const Temperature& T,
                         std::size_t N, int prec);

/// Semi-decision surrogate for T-convergence: feeds terms until the partial
/// sum's certified lower endpoint strictly exceeds `bound` (ExceededBound,
/// with the term count at certification) or max_terms is reached
/// (BoundedSoFar). True T-convergence is a limit property; this reports
/// finite evidence only.
TSumReport t_convergence_probe(IncreasingSequence& seq, const Temperature& T,
                               const Rational& bound, std::size_t max_terms,
                               int prec);

/// [a_N, a_N + tail_bound(N)] rounded outward at prec; requires a tail
/// bound.
DyadicInterval limit_enclosure(IncreasingSequence& seq, std::size_t N,
                               int prec);

/// The tightest available enclosure of the limit: the exact closed form
/// when the family has one, otherwise limit_enclosure at (N, prec).
DyadicInterval best_limit_enclosure(IncreasingSequence& seq, std::size_t N,
                                    int prec);

}  // namespace relab
