/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "relab/errors.hpp"

namespace relab {

using Int = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. All arithmetic is exact; comparison is decidable.
///
/// This is the substrate every sequence term, bound, and witness constant
/// lives in. Values cross the CLI boundary as "p/q" strings; no
/// floating-point representation exists anywhere in the library.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}          // NOLINT: implicit by design
  Rational(const Int& n) : v_(n) {}    // NOLINT
  Rational(const Int& num, const Int& den);
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  /// Parses "p", "-p", or "p/q" in base 10. Rejects anything else,
  /// including decimal points.
  static Rational from_string(std::string_view s);

  const Int numerator() const { return v_.get_num(); }
  const Int denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_negative() const { return sgn(v_) < 0; }
  bool is_positive() const { return sgn(v_) > 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  Rational abs() const { return is_negative() ? -*this : *this; }

  /// x^e for integer e (e < 0 requires x != 0).
  Rational pow_int(long e) const;

  /// Largest integer <= value.
  Int floor() const;
  /// Smallest integer >= value.
  Int ceil() const;

  /// floor(log2(x)) for x > 0: the unique e with 2^e <= x < 2^{e+1}.
  long floor_log2() const;

  /// Canonical "p/q" (or "p" when q = 1).
  std::string str() const;

  const mpq_class& raw() const { return v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact 2^k as a Rational, any integer k.
Rational pow2(long k);

/// The temperature parameter: a rational in (0, 1]. Construction enforces
/// the range; a value above 1 is reported as a divergent parameter because
/// the generalized halting probability diverges there.
class Temperature {
 public:
  explicit Temperature(Rational value);
  const Rational& value() const { return v_; }

  friend bool operator==(const Temperature&, const Temperature&) = default;

 private:
  Rational v_;
};

}  // namespace relab
