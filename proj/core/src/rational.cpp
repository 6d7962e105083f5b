/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#include "relab/rational.hpp"

#include <cctype>
#include <ostream>

namespace relab {

Rational::Rational(const Int& num, const Int& den) {
  if (sgn(den) == 0) {
    throw Error("rational: zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
  auto valid = [](std::string_view part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  std::string text(s);
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid(text)) throw ParseError("rational: malformed value '" + text + "'");
    return Rational(Int(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!valid(num) || !valid(den)) {
    throw ParseError("rational: malformed value '" + text + "'");
  }
  return Rational(Int(num), Int(den));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw Error("rational: 0 raised to a negative power");
    return Rational(0);
  }
  unsigned long mag = e < 0 ? static_cast<unsigned long>(-e)
                            : static_cast<unsigned long>(e);
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), mag);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), mag);
  return e < 0 ? Rational(den, num) : Rational(num, den);
}

Int Rational::floor() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Int Rational::ceil() const {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

long Rational::floor_log2() const {
  if (!is_positive()) throw Error("rational: floor_log2 of a non-positive value");
  // 2^e <= n/d  <=>  2^e * d <= n (e >= 0), resp. d <= n * 2^{-e} (e < 0).
  const Int n = numerator();
  const Int d = denominator();
  long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
  auto le = [&](long k) {
    Int lhs, rhs;
    if (k >= 0) {
      mpz_mul_2exp(lhs.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(k));
      return cmp(lhs, n) <= 0;
    }
    mpz_mul_2exp(rhs.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(-k));
    return cmp(d, rhs) <= 0;
  };
  // The size estimate is off by at most one either way.
  while (!le(e)) --e;
  while (le(e + 1)) ++e;
  return e;
}

std::string Rational::str() const {
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational pow2(long k) {
  Int one = 1;
  Int p;
  mpz_mul_2exp(p.get_mpz_t(), one.get_mpz_t(),
               static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? Rational(one, p) : Rational(p);
}

Temperature::Temperature(Rational value) : v_(std::move(value)) {
  if (!v_.is_positive()) {
    throw Error("temperature: T must be positive, got " + v_.str());
  }
  if (v_ > Rational(1)) {
    throw DivergentParameterError("temperature: T = " + v_.str() +
                                  " exceeds 1; the T-weighted halting sum diverges");
  }
}

}  // namespace relab
