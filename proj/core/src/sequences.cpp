/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#include "relab/sequences.hpp"

#include <memory>
#include <utility>

namespace relab {

IncreasingSequence& IncreasingSequence::with_tail_bound(TailBound tb) {
  tail_ = std::move(tb);
  return *this;
}

IncreasingSequence& IncreasingSequence::with_length(std::size_t len) {
  length_ = len;
  return *this;
}

IncreasingSequence& IncreasingSequence::with_t_sum_certificate(
    TSumCertificate cert) {
  cert_ = std::move(cert);
  return *this;
}

IncreasingSequence& IncreasingSequence::with_exact_limit(Rational limit) {
  exact_limit_ = std::move(limit);
  return *this;
}

Rational IncreasingSequence::term(std::size_t n) {
  if (length_ && n >= *length_) {
    throw UnsupportedError("sequence '" + name_ + "' has only " +
                           std::to_string(*length_) + " materializable terms");
  }
  while (cache_.size() <= n) {
    std::size_t k = cache_.size();
    Rational next = gen_(k);
    if (k > 0 && !(next > cache_.back())) {
      throw MonotonicityError(
          k, "sequence '" + name_ + "' is not strictly increasing at index " +
                 std::to_string(k) + ": a_" + std::to_string(k - 1) + " = " +
                 cache_.back().str() + ", a_" + std::to_string(k) + " = " +
                 next.str());
    }
    cache_.push_back(std::move(next));
  }
  return cache_[n];
}

Rational IncreasingSequence::increment(std::size_t n) {
  return term(n + 1) - term(n);
}

Rational IncreasingSequence::tail_bound(std::size_t n) const {
  if (!tail_) {
    throw UnsupportedError("sequence '" + name_ + "' carries no tail bound");
  }
  return (*tail_)(n);
}

std::optional<Rational> IncreasingSequence::certified_t_sum_upper(
    const Temperature& T) const {
  if (!cert_) return std::nullopt;
  return (*cert_)(T);
}

IncreasingSequence geometric_sequence(const Rational& limit,
                                      const Rational& rho) {
  if (!limit.is_positive()) {
    throw Error("geometric sequence: limit must be positive");
  }
  if (!rho.is_positive() || rho >= Rational(1)) {
    throw Error("geometric sequence: ratio must lie in (0, 1)");
  }
  std::string name = "geom:" + limit.str() + "," + rho.str();
  IncreasingSequence seq(name, [limit, rho](std::size_t n) {
    return limit * (Rational(1) - rho.pow_int(static_cast<long>(n)));
  });
  seq.with_tail_bound([limit, rho](std::size_t n) {
    return limit * rho.pow_int(static_cast<long>(n));
  });
  seq.with_exact_limit(limit);
  // Increments are D rho^n with D = L(1-rho), so the full T-power series is
  // D^T / (1 - rho^T). Upper-bound both factors through outward rounding;
  // the quotient of rational bounds is again a certified rational bound.
  Rational d = limit * (Rational(1) - rho);
  seq.with_t_sum_certificate(
      [d, rho](const Temperature& T) -> std::optional<Rational> {
        for (int prec = 64; prec <= 1024; prec *= 2) {
          Rational d_pow_hi = pow_interval(d, T.value(), prec).hi_rational();
          Rational rho_pow_hi =
              pow_interval(rho, T.value(), prec).hi_rational();
          if (rho_pow_hi < Rational(1)) {
            return d_pow_hi / (Rational(1) - rho_pow_hi);
          }
        }
        return std::nullopt;
      });
  return seq;
}

namespace {

Rational inverse_power(std::size_t k, long s) {
  Int ks;
  mpz_ui_pow_ui(ks.get_mpz_t(), static_cast<unsigned long>(k),
                static_cast<unsigned long>(s));
  return Rational(Int(1), ks);
}

}  // namespace

IncreasingSequence powerlaw_sequence(long s) {
  if (s < 1) {
    throw Error("power-law sequence: exponent must be a positive integer");
  }
  std::string name = "powerlaw:" + std::to_string(s);
  // a_n = sum_{k<=n} k^-s, kept incrementally; materialization asks for
  // indices in increasing order, anything else falls back to the direct sum.
  struct State {
    Rational sum;
    std::size_t index = 0;
  };
  auto st = std::make_shared<State>();
  IncreasingSequence seq(name, [s, st](std::size_t n) {
    if (n < st->index) {
      Rational sum(0);
      for (std::size_t k = 1; k <= n; ++k) sum += inverse_power(k, s);
      return sum;
    }
    while (st->index < n) {
      ++st->index;
      st->sum += inverse_power(st->index, s);
    }
    return st->sum;
  });
  if (s >= 2) {
    // Integral test: sum_{k>n} k^-s <= n^{1-s}/(s-1) for n >= 1, and the
    // whole series is at most 1 + 1/(s-1).
    seq.with_tail_bound([s](std::size_t n) {
      if (n == 0) return Rational(1) + Rational(1, s - 1);
      Int ns;
      mpz_ui_pow_ui(ns.get_mpz_t(), static_cast<unsigned long>(n),
                    static_cast<unsigned long>(s - 1));
      return Rational(Int(1), ns * (s - 1));
    });
  }
  seq.with_t_sum_certificate(
      [s](const Temperature& T) -> std::optional<Rational> {
        // Terms are k^-sT; the series converges iff sT > 1, with bound
        // 1 + 1/(sT - 1), again by the integral test.
        Rational st_exp = Rational(s) * T.value();
        if (st_exp <= Rational(1)) return std::nullopt;
        return Rational(1) + Rational(1) / (st_exp - Rational(1));
      });
  return seq;
}

namespace {

struct TermAccumulator {
  Rational exact_part;                       // sum of exact terms
  std::optional<DyadicInterval> interval_part;  // sum of enclosed terms
  std::size_t interval_terms = 0;

  void add(const Rational& delta, const Temperature& T, int prec) {
    if (auto exact = pow_exact(delta, T.value())) {
      exact_part += *exact;
      return;
    }
    DyadicInterval term = pow_interval(delta, T.value(), prec);
    interval_part = interval_part ? *interval_part + term : term;
    ++interval_terms;
  }

  bool all_exact() const { return interval_terms == 0; }

  Rational lower() const {
    Rational lo = exact_part;
    if (interval_part) lo += interval_part->lo_rational();
    return lo;
  }

  DyadicInterval total(int prec) const {
    DyadicInterval exact_enclosed =
        DyadicInterval::enclose(exact_part, exact_part, prec);
    if (interval_part) return exact_enclosed + *interval_part;
    return exact_enclosed;
  }
};

}  // namespace

TSumReport t_sum_partial(IncreasingSequence& seq, const Temperature& T,
                         std::size_t N, int prec) {
  if (N < 1) throw Error("t_sum_partial: N must be >= 1");
  TermAccumulator acc;
  for (std::size_t n = 0; n < N; ++n) {
    acc.add(seq.increment(n), T, prec);
  }
  TSumReport report{acc.total(prec),
                    acc.all_exact() ? std::optional<Rational>(acc.exact_part)
                                    : std::nullopt,
                    N,
                    TSumReport::Verdict::BoundedSoFar,
                    std::nullopt,
                    std::nullopt};
  return report;
}

TSumReport t_convergence_probe(IncreasingSequence& seq, const Temperature& T,
                               const Rational& bound, std::size_t max_terms,
                               int prec) {
  if (!bound.is_positive()) throw Error("t_convergence_probe: bound must be positive");
  std::size_t limit = max_terms;
  if (auto len = seq.length()) {
    // Increments need term n+1; a finite sequence of k terms has k-1 of them.
    std::size_t available = *len > 0 ? *len - 1 : 0;
    if (available < limit) limit = available;
  }
  TermAccumulator acc;
  std::size_t used = 0;
  for (std::size_t n = 0; n < limit; ++n) {
    acc.add(seq.increment(n), T, prec);
    ++used;
    // ExceededBound only on a certified strict exceedance of the lower
    // endpoint; overlap stays BoundedSoFar.
    if (acc.lower() > bound) {
      return TSumReport{acc.total(prec),
                        acc.all_exact()
                            ? std::optional<Rational>(acc.exact_part)
                            : std::nullopt,
                        used,
                        TSumReport::Verdict::ExceededBound,
                        bound,
                        used};
    }
  }
  DyadicInterval total = used > 0 ? acc.total(prec)
                                  : DyadicInterval::point(Dyadic(0), prec);
  return TSumReport{total,
                    acc.all_exact() ? std::optional<Rational>(acc.exact_part)
                                    : std::nullopt,
                    used,
                    TSumReport::Verdict::BoundedSoFar,
                    bound,
                    std::nullopt};
}

DyadicInterval limit_enclosure(IncreasingSequence& seq, std::size_t N,
                               int prec) {
  Rational a_n = seq.term(N);
  Rational tail = seq.tail_bound(N);
  return DyadicInterval::enclose(a_n, a_n + tail, prec);
}

DyadicInterval best_limit_enclosure(IncreasingSequence& seq, std::size_t N,
                                    int prec) {
  if (auto limit = seq.exact_limit()) {
    return DyadicInterval::enclose(*limit, *limit, prec);
  }
  return limit_enclosure(seq, N, prec);
}

}  // namespace relab
