/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

// Test-only oracles, independent of the library's computation paths.
// Root enclosures here come from plain bisection on scaled integers; the
// library uses GMP root extraction, so agreement is a genuine cross-check.

#pragma once

#include <cstddef>

#include "relab/dyadic.hpp"
#include "relab/rational.hpp"

namespace relab::oracle {

// Enclosure of x^(u/v) of width 2^-prec (or exact), by bisection on
// m: largest integer with (m / 2^prec)^v <= x^u, i.e. m^v * den <= num * 2^(v prec).
inline DyadicInterval root_interval(const Rational& x, unsigned long u,
                                    unsigned long v, int prec) {
  if (x.is_negative()) throw Error("oracle: negative base");
  if (x.is_zero()) return DyadicInterval::point(Dyadic(0), prec);
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), u);
  mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), u);
  Int target = num;
  mpz_mul_2exp(target.get_mpz_t(), target.get_mpz_t(),
               static_cast<unsigned long>(prec) * v);
  auto below = [&](const Int& m) {
    Int mv;
    mpz_pow_ui(mv.get_mpz_t(), m.get_mpz_t(), v);
    return cmp(mv * den, target) <= 0;
  };
  Int lo(0), hi(1);
  while (below(hi)) hi *= 2;
  // Invariant: below(lo), !below(hi).
  while (cmp(hi - lo, 1) > 0) {
    Int mid = (lo + hi) / 2;
    if (below(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Int check;
  mpz_pow_ui(check.get_mpz_t(), lo.get_mpz_t(), v);
  bool exact = check * den == target;
  Dyadic d_lo(lo, -static_cast<long>(prec));
  Dyadic d_hi(exact ? lo : lo + 1, -static_cast<long>(prec));
  return DyadicInterval(d_lo, d_hi, prec);
}

// Same, with the exponent given as a positive rational.
inline DyadicInterval pow_oracle(const Rational& x, const Rational& t,
                                 int prec) {
  return root_interval(x, t.numerator().get_ui(), t.denominator().get_ui(),
                       prec);
}

// Enclosure of 2^e for rational e (any sign).
inline DyadicInterval two_pow_oracle(const Rational& e, int prec) {
  if (e.is_zero()) return DyadicInterval::point(Dyadic(1), prec);
  if (e.is_positive()) return pow_oracle(Rational(2), e, prec);
  return pow_oracle(Rational(1, 2), -e, prec);
}

// First N with sum_{k=1..N} 1/k > bound, exact rational arithmetic.
inline std::size_t harmonic_first_exceed(const Rational& bound) {
  Rational sum(0);
  std::size_t n = 0;
  while (true) {
    ++n;
    sum += Rational(Int(1), Int(static_cast<long>(n)));
    if (sum > bound) return n;
  }
}

// Partial sum of k^-s for k = 1..N, exact.
inline Rational power_sum(std::size_t N, long s) {
  Rational sum(0);
  for (std::size_t k = 1; k <= N; ++k) {
    Int ks;
    mpz_ui_pow_ui(ks.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(s));
    sum += Rational(Int(1), ks);
  }
  return sum;
}

}  // namespace relab::oracle
