/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "relab/dyadic.hpp"
#include "relab/rational.hpp"

using namespace relab;

TEST_CASE("rational canonical form and arithmetic") {
  Rational r(6, 4);
  CHECK(r.numerator() == 3);
  CHECK(r.denominator() == 2);
  Rational neg(3, -6);
  CHECK(neg.numerator() == -1);
  CHECK(neg.denominator() == 2);

  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
  CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
  CHECK(Rational(7, 2) / Rational(7, 4) == Rational(2));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("rational parsing accepts p/q only") {
  CHECK(Rational::from_string("21/64") == Rational(21, 64));
  CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
  CHECK(Rational::from_string("17") == Rational(17));
  CHECK_THROWS_AS(Rational::from_string("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::from_string(""), ParseError);
  CHECK_THROWS_AS(Rational::from_string("1/"), ParseError);
  CHECK_THROWS_AS(Rational::from_string("a/b"), ParseError);
}

TEST_CASE("floor, ceil, floor_log2") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(1).floor_log2() == 0);
  CHECK(Rational(5, 2).floor_log2() == 1);
  CHECK(Rational(1, 2).floor_log2() == -1);
  CHECK(Rational(3, 8).floor_log2() == -2);
  CHECK(pow2(-3) == Rational(1, 8));
  CHECK(pow2(5) == Rational(32));
}

TEST_CASE("temperature range") {
  CHECK(Temperature(Rational(1)).value() == Rational(1));
  CHECK(Temperature(Rational(1, 2)).value() == Rational(1, 2));
  CHECK_THROWS_AS(Temperature(Rational(0)), Error);
  CHECK_THROWS_AS(Temperature(Rational(-1, 2)), Error);
  CHECK_THROWS_AS(Temperature(Rational(3, 2)), DivergentParameterError);
}

TEST_CASE("dyadic canonicalization and arithmetic") {
  Dyadic d(Int(12), -2);  // 12/4 = 3
  CHECK(d.mantissa() == 3);
  CHECK(d.exponent() == 0);
  CHECK(Dyadic(Int(0), 17).exponent() == 0);

  Dyadic a(Int(3), -2);   // 3/4
  Dyadic b(Int(5), -4);   // 5/16
  CHECK((a + b).to_rational() == Rational(17, 16));
  CHECK((a - b).to_rational() == Rational(7, 16));
  CHECK((a * b).to_rational() == Rational(15, 64));
  CHECK(a > b);
  CHECK(-a < b);
}

TEST_CASE("dyadic rounding of rationals") {
  CHECK(Dyadic::floor_at(Rational(1, 3), 4).to_rational() == Rational(5, 16));
  CHECK(Dyadic::ceil_at(Rational(1, 3), 4).to_rational() == Rational(6, 16));
  CHECK(Dyadic::floor_at(Rational(5, 8), 3).to_rational() == Rational(5, 8));
  CHECK(Dyadic::ceil_at(Rational(5, 8), 3).to_rational() == Rational(5, 8));
  CHECK(Dyadic::from_rational(Rational(5, 8)).has_value());
  CHECK(!Dyadic::from_rational(Rational(1, 3)).has_value());
}

TEST_CASE("interval construction and containment") {
  auto iv = DyadicInterval::enclose(Rational(1, 3), Rational(1, 3), 10);
  CHECK(iv.contains(Rational(1, 3)));
  CHECK(iv.width() <= pow2(-10));
  CHECK_THROWS_AS(DyadicInterval(Dyadic(1), Dyadic(0), 0), Error);

  auto sum = iv + DyadicInterval::point(Dyadic(Int(1), -1));
  CHECK(sum.contains(Rational(1, 3) + Rational(1, 2)));
}

TEST_CASE("pow_interval worked examples") {
  // Perfect square: (1/4)^(1/2) = 1/2 exactly.
  auto sq = pow_interval(Rational(1, 4), Rational(1, 2), 10);
  CHECK(sq.is_point());
  CHECK(sq.lo_rational() == Rational(1, 2));

  // Identity exponent: [x, x] up to dyadic rounding.
  auto id_dyadic = pow_interval(Rational(5, 8), Rational(1), 10);
  CHECK(id_dyadic.is_point());
  CHECK(id_dyadic.lo_rational() == Rational(5, 8));
  auto id_third = pow_interval(Rational(1, 3), Rational(1), 10);
  CHECK(id_third.contains(Rational(1, 3)));
  CHECK(id_third.width() <= pow2(-10));
  CHECK(pow_exact(Rational(1, 3), Rational(1)) == Rational(1, 3));

  // Cube root of 1/2, against the bisection oracle at doubled precision.
  auto cbrt = pow_interval(Rational(1, 2), Rational(1, 3), 20);
  auto oracle = oracle::pow_oracle(Rational(1, 2), Rational(1, 3), 40);
  CHECK(cbrt.width() <= pow2(-20));
  CHECK(cbrt.lo_rational() <= oracle.lo_rational());
  CHECK(oracle.hi_rational() <= cbrt.hi_rational());
  // 2^(-1/3) = 0.7937005...
  CHECK(cbrt.lo_rational() > Rational(793700, 1000000));
  CHECK(cbrt.hi_rational() < Rational(793701, 1000000));
}

TEST_CASE("pow_interval rejects bad arguments") {
  CHECK_THROWS_AS(pow_interval(Rational(-1), Rational(1, 2), 8), Error);
  CHECK_THROWS_AS(pow_interval(Rational(1, 2), Rational(0), 8), Error);
  CHECK_THROWS_AS(pow_interval(Rational(1, 2), Rational(-2), 8), Error);
  CHECK_THROWS_AS(pow_interval(Rational(1, 2), Rational(1, 2), 0), Error);
}

TEST_CASE("two_pow_interval worked examples") {
  auto eighth = two_pow_interval(Rational(-3), 4);
  CHECK(eighth.is_point());
  CHECK(eighth.lo_rational() == Rational(1, 8));

  // -|p|/T with |p| = 1, T = 1/2 gives exponent -2 exactly.
  Rational exponent = -Rational(1) / Rational(1, 2);
  CHECK(exponent == Rational(-2));
  auto quarter = two_pow_interval(exponent, 4);
  CHECK(quarter.is_point());
  CHECK(quarter.lo_rational() == Rational(1, 4));

  // 2^(-1/2) = 0.7071067...
  auto inv_sqrt2 = two_pow_interval(Rational(-1, 2), 20);
  auto oracle = oracle::two_pow_oracle(Rational(-1, 2), 40);
  CHECK(inv_sqrt2.lo_rational() <= oracle.lo_rational());
  CHECK(oracle.hi_rational() <= inv_sqrt2.hi_rational());
  CHECK(inv_sqrt2.lo_rational() > Rational(7071067, 10000000));
  CHECK(inv_sqrt2.hi_rational() < Rational(7071068, 10000000));

  CHECK(two_pow_exact(Rational(4)) == Rational(16));
  CHECK(!two_pow_exact(Rational(1, 2)).has_value());
}

TEST_CASE("containment against the oracle on random inputs") {
  std::mt19937_64 rng(20260810);
  std::uniform_int_distribution<long> num_dist(0, 1 << 16);
  std::uniform_int_distribution<long> den_dist(1, 1 << 16);
  std::uniform_int_distribution<unsigned long> exp_dist(1, 5);
  std::uniform_int_distribution<int> prec_dist(2, 40);
  for (int i = 0; i < 2000; ++i) {
    Rational x(num_dist(rng), den_dist(rng));
    Rational t(Int(static_cast<long>(exp_dist(rng))),
               Int(static_cast<long>(exp_dist(rng))));
    int prec = prec_dist(rng);
    auto iv = pow_interval(x, t, prec);
    auto oracle = oracle::pow_oracle(x, t, prec + 32);
    CAPTURE(x.str());
    CAPTURE(t.str());
    CAPTURE(prec);
    REQUIRE(iv.width() <= pow2(-prec));
    REQUIRE(iv.lo_rational() <= oracle.lo_rational());
    REQUIRE(oracle.hi_rational() <= iv.hi_rational());
  }
}

TEST_CASE("monotone refinement: finer precision never widens") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num_dist(1, 1 << 12);
  std::uniform_int_distribution<long> den_dist(1, 1 << 12);
  std::uniform_int_distribution<unsigned long> exp_dist(1, 4);
  std::uniform_int_distribution<int> prec_dist(2, 30);
  for (int i = 0; i < 500; ++i) {
    Rational x(num_dist(rng), den_dist(rng));
    Rational t(Int(static_cast<long>(exp_dist(rng))),
               Int(static_cast<long>(exp_dist(rng))));
    int prec = prec_dist(rng);
    auto coarse = pow_interval(x, t, prec);
    auto fine = pow_interval(x, t, prec + 8);
    REQUIRE(coarse.contains(fine));
  }
}
