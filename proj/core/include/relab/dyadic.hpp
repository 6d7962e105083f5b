/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#pragma once

#include <optional>
#include <string>

#include "relab/rational.hpp"

namespace relab {

/// A dyadic rational mant * 2^exp, canonical form: mant odd, or mant = 0
/// with exp = 0. Endpoint type for all interval enclosures; dyadics stay
/// bounded in size under repeated outward rounding, general rationals
/// would not.
class Dyadic {
 public:
  Dyadic() : mant_(0), exp_(0) {}
  Dyadic(Int mant, long exp);
  Dyadic(long value) : Dyadic(Int(value), 0) {}  // NOLINT

  /// Largest multiple of 2^-prec that is <= r.
  static Dyadic floor_at(const Rational& r, int prec);
  /// Smallest multiple of 2^-prec that is >= r.
  static Dyadic ceil_at(const Rational& r, int prec);
  /// Exact conversion; empty unless the denominator is a power of two.
  static std::optional<Dyadic> from_rational(const Rational& r);

  const Int& mantissa() const { return mant_; }
  long exponent() const { return exp_; }
  bool is_zero() const { return sgn(mant_) == 0; }

  Rational to_rational() const;

  Dyadic operator-() const { return Dyadic(-mant_, exp_); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.mant_ == b.mant_ && a.exp_ == b.exp_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  std::string str() const { return to_rational().str(); }

 private:
  Int mant_;
  long exp_;
};

/// Closed interval [lo, hi] with dyadic endpoints. Every operation that
/// produces one guarantees the true real result is contained (outward
/// rounding). `prec` records the grid (bits) the endpoints were rounded
/// at; it is provenance for reports, not part of the value.
class DyadicInterval {
 public:
  DyadicInterval(Dyadic lo, Dyadic hi, int prec);

  static DyadicInterval point(const Dyadic& d, int prec = 0) {
    return DyadicInterval(d, d, prec);
  }
  /// Outward rounding of the rational interval [lo, hi] onto the
  /// 2^-prec grid.
  static DyadicInterval enclose(const Rational& lo, const Rational& hi,
                                int prec);

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }
  int prec() const { return prec_; }

  Rational lo_rational() const { return lo_.to_rational(); }
  Rational hi_rational() const { return hi_.to_rational(); }
  Rational width() const { return (hi_ - lo_).to_rational(); }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& x) const;
  bool contains(const DyadicInterval& inner) const;

  /// Exact interval sum; dyadic addition never rounds.
  friend DyadicInterval operator+(const DyadicInterval& a,
                                  const DyadicInterval& b);

  std::string str() const;

 private:
  Dyadic lo_, hi_;
  int prec_;
};

/// x^t as an exact rational when one exists (x >= 0, t = u/v > 0 in lowest
/// terms: requires numerator and denominator of x^u to be perfect v-th
/// powers). Returns nullopt for irrational results.
std::optional<Rational> pow_exact(const Rational& x, const Rational& t);

/// Enclosure of x^t for x >= 0, t > 0, prec >= 1 bits. Width <= 2^-prec;
/// the interval degenerates to a point whenever x^t lands exactly on the
/// working grid. Computed by integer v-th root extraction on x^u, never by
/// logarithms. Rejects x < 0 and t <= 0.
DyadicInterval pow_interval(const Rational& x, const Rational& t, int prec);

/// Enclosure of 2^e for any rational e, prec >= 1 bits. Exact (lo = hi)
/// whenever e is an integer.
DyadicInterval two_pow_interval(const Rational& e, int prec);

/// 2^e as an exact rational; empty unless e is an integer (2^{a/b} is
/// irrational for b > 1 in lowest terms).
std::optional<Rational> two_pow_exact(const Rational& e);

}  // namespace relab
