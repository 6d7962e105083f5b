/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#include "relab/dyadic.hpp"

#include <utility>

namespace relab {

namespace {

Int shift_left(const Int& x, unsigned long bits) {
  Int r;
  mpz_mul_2exp(r.get_mpz_t(), x.get_mpz_t(), bits);
  return r;
}

// floor(num / den) for den > 0.
Int floor_div(const Int& num, const Int& den) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

Dyadic::Dyadic(Int mant, long exp) : mant_(std::move(mant)), exp_(exp) {
  if (sgn(mant_) == 0) {
    exp_ = 0;
    return;
  }
  unsigned long tz = mpz_scan1(mant_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_fdiv_q_2exp(mant_.get_mpz_t(), mant_.get_mpz_t(), tz);
    exp_ += static_cast<long>(tz);
  }
}

Dyadic Dyadic::floor_at(const Rational& r, int prec) {
  // floor(r * 2^prec) * 2^-prec
  Int scaled = shift_left(r.numerator(), static_cast<unsigned long>(prec));
  return Dyadic(floor_div(scaled, r.denominator()), -static_cast<long>(prec));
}

Dyadic Dyadic::ceil_at(const Rational& r, int prec) {
  Int scaled = shift_left(r.numerator(), static_cast<unsigned long>(prec));
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), r.denominator().get_mpz_t());
  return Dyadic(std::move(q), -static_cast<long>(prec));
}

std::optional<Dyadic> Dyadic::from_rational(const Rational& r) {
  const Int den = r.denominator();
  // den is a power of two iff it has a single set bit.
  if (mpz_popcount(den.get_mpz_t()) != 1) return std::nullopt;
  long e = static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
  return Dyadic(r.numerator(), -e);
}

Rational Dyadic::to_rational() const {
  if (exp_ >= 0) {
    return Rational(shift_left(mant_, static_cast<unsigned long>(exp_)));
  }
  return Rational(mant_, shift_left(Int(1), static_cast<unsigned long>(-exp_)));
}

namespace {

// Aligns both operands to the smaller exponent.
std::pair<Int, Int> aligned(const Dyadic& a, const Dyadic& b, long& exp) {
  exp = std::min(a.exponent(), b.exponent());
  Int ma = a.mantissa(), mb = b.mantissa();
  if (a.exponent() > exp && sgn(ma) != 0) {
    ma = shift_left(ma, static_cast<unsigned long>(a.exponent() - exp));
  }
  if (b.exponent() > exp && sgn(mb) != 0) {
    mb = shift_left(mb, static_cast<unsigned long>(b.exponent() - exp));
  }
  return {std::move(ma), std::move(mb)};
}

}  // namespace

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  long e;
  auto [ma, mb] = aligned(a, b, e);
  return Dyadic(ma + mb, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  long e;
  auto [ma, mb] = aligned(a, b, e);
  return Dyadic(ma - mb, e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.mantissa() * b.mantissa(), a.exponent() + b.exponent());
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int sa = sgn(a.mantissa()), sb = sgn(b.mantissa());
  if (sa != sb) {
    return sa < sb ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  long e;
  auto [ma, mb] = aligned(a, b, e);
  int c = cmp(ma, mb);
  return c < 0 ? std::strong_ordering::less
       : c > 0 ? std::strong_ordering::greater
               : std::strong_ordering::equal;
}

DyadicInterval::DyadicInterval(Dyadic lo, Dyadic hi, int prec)
    : lo_(std::move(lo)), hi_(std::move(hi)), prec_(prec) {
  if (lo_ > hi_) {
    throw Error("interval: lo > hi (" + lo_.str() + " > " + hi_.str() + ")");
  }
}

DyadicInterval DyadicInterval::enclose(const Rational& lo, const Rational& hi,
                                       int prec) {
  return DyadicInterval(Dyadic::floor_at(lo, prec), Dyadic::ceil_at(hi, prec),
                        prec);
}

bool DyadicInterval::contains(const Rational& x) const {
  return lo_rational() <= x && x <= hi_rational();
}

bool DyadicInterval::contains(const DyadicInterval& inner) const {
  return lo_ <= inner.lo_ && inner.hi_ <= hi_;
}

DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b) {
  return DyadicInterval(a.lo_ + b.lo_, a.hi_ + b.hi_,
                        std::min(a.prec_, b.prec_));
}

std::string DyadicInterval::str() const {
  return "[" + lo_.str() + ", " + hi_.str() + "]";
}

namespace {

// Exponent u/v unpacked to machine words; desk-scale powers only.
struct SmallExponent {
  unsigned long num;
  unsigned long den;
};

SmallExponent unpack_exponent(const Rational& t) {
  if (!t.is_positive()) {
    throw Error("pow: exponent must be positive, got " + t.str());
  }
  if (!t.numerator().fits_ulong_p() || !t.denominator().fits_ulong_p()) {
    throw UnsupportedError("pow: exponent " + t.str() + " is out of range");
  }
  return {t.numerator().get_ui(), t.denominator().get_ui()};
}

Rational pow_rational_ui(const Rational& x, unsigned long u) {
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), u);
  mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), u);
  return Rational(num, den);
}

}  // namespace

std::optional<Rational> pow_exact(const Rational& x, const Rational& t) {
  if (x.is_negative()) {
    throw Error("pow: base must be non-negative, got " + x.str());
  }
  auto [u, v] = unpack_exponent(t);
  if (x.is_zero()) return Rational(0);
  Rational y = pow_rational_ui(x, u);
  if (v == 1) return y;
  Int rn, rd, rem;
  mpz_rootrem(rn.get_mpz_t(), rem.get_mpz_t(), y.numerator().get_mpz_t(), v);
  if (sgn(rem) != 0) return std::nullopt;
  mpz_rootrem(rd.get_mpz_t(), rem.get_mpz_t(), y.denominator().get_mpz_t(), v);
  if (sgn(rem) != 0) return std::nullopt;
  return Rational(rn, rd);
}

DyadicInterval pow_interval(const Rational& x, const Rational& t, int prec) {
  if (prec < 1) throw Error("pow: precision must be >= 1 bit");
  if (auto exact = pow_exact(x, t)) {
    return DyadicInterval::enclose(*exact, *exact, prec);
  }
  auto [u, v] = unpack_exponent(t);
  // x^{u/v} = (x^u)^{1/v}, irrational here. With y = n/d = x^u:
  //   floor(y^{1/v} * 2^prec) = floor(root_v(floor(n * 2^{prec*v} / d)))
  // because an integer m satisfies m <= y^{1/v} * 2^prec iff
  // m^v <= n * 2^{prec*v} / d iff m^v <= floor(...).
  Rational y = pow_rational_ui(x, u);
  Int scaled = y.numerator();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(),
               static_cast<unsigned long>(prec) * v);
  Int m;
  mpz_fdiv_q(m.get_mpz_t(), scaled.get_mpz_t(), y.denominator().get_mpz_t());
  Int root;
  mpz_root(root.get_mpz_t(), m.get_mpz_t(), v);
  Dyadic lo(root, -static_cast<long>(prec));
  Dyadic hi(root + 1, -static_cast<long>(prec));
  return DyadicInterval(lo, hi, prec);
}

std::optional<Rational> two_pow_exact(const Rational& e) {
  if (!e.is_integer()) return std::nullopt;
  if (!e.numerator().fits_slong_p()) {
    throw UnsupportedError("pow: 2^" + e.str() + " is out of range");
  }
  return pow2(e.numerator().get_si());
}

DyadicInterval two_pow_interval(const Rational& e, int prec) {
  if (prec < 1) throw Error("pow: precision must be >= 1 bit");
  if (auto exact = two_pow_exact(e)) {
    auto d = Dyadic::from_rational(*exact);
    return DyadicInterval::point(*d, prec);
  }
  if (e.is_positive()) return pow_interval(Rational(2), e, prec);
  return pow_interval(Rational(1, 2), -e, prec);
}

}  // namespace relab
