/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "relab/sequences.hpp"

using namespace relab;

TEST_CASE("geometric and power-law terms") {
  auto geom = geometric_sequence(Rational(1), Rational(1, 2));
  CHECK(geom.term(0) == Rational(0));
  CHECK(geom.term(3) == Rational(7, 8));
  CHECK(geom.increment(2) == Rational(1, 8));
  CHECK(geom.tail_bound(4) == Rational(1, 16));
  CHECK(geom.exact_limit() == Rational(1));

  auto pl = powerlaw_sequence(2);
  CHECK(pl.term(0) == Rational(0));
  CHECK(pl.term(3) == Rational(49, 36));  // 1 + 1/4 + 1/9
  CHECK(pl.increment(3) == Rational(1, 16));
  CHECK(pl.term(2) == Rational(5, 4));  // out-of-order re-request

  CHECK_THROWS_AS(geometric_sequence(Rational(1), Rational(3, 2)), Error);
  CHECK_THROWS_AS(geometric_sequence(Rational(-1), Rational(1, 2)), Error);
  CHECK_THROWS_AS(powerlaw_sequence(0), Error);
}

TEST_CASE("monotonicity violation reports the offending index") {
  IncreasingSequence bad("dip", [](std::size_t n) {
    return n == 3 ? Rational(0) : Rational(Int(static_cast<long>(n)));
  });
  CHECK(bad.term(2) == Rational(2));
  CHECK_THROWS_AS(bad.term(5), MonotonicityError);
  try {
    bad.term(5);
  } catch (const MonotonicityError& e) {
    CHECK(e.index == 3);
  }
}

TEST_CASE("finite sequences refuse to materialize past their length") {
  IncreasingSequence seq("short", [](std::size_t n) {
    return Rational(Int(static_cast<long>(n)));
  });
  seq.with_length(3);
  CHECK(seq.term(2) == Rational(2));
  CHECK_THROWS_AS(seq.term(3), UnsupportedError);
}

TEST_CASE("t_sum_partial telescopes exactly at T = 1") {
  auto geom = geometric_sequence(Rational(1), Rational(1, 2));
  auto report = t_sum_partial(geom, Temperature(Rational(1)), 4, 32);
  REQUIRE(report.exact_sum.has_value());
  CHECK(*report.exact_sum == Rational(15, 16));
  CHECK(report.terms_used == 4);
  CHECK(report.partial_sum.contains(Rational(15, 16)));
}

TEST_CASE("t_sum_partial at T = 1/2 encloses the oracle sum") {
  auto geom = geometric_sequence(Rational(1), Rational(1, 2));
  auto report = t_sum_partial(geom, Temperature(Rational(1, 2)), 4, 32);
  // Terms are 2^-(n+1)/2 for n = 0..3; sum them with the bisection oracle.
  Rational lo(0), hi(0);
  for (long n = 0; n < 4; ++n) {
    auto term = oracle::two_pow_oracle(Rational(-(n + 1), 2), 64);
    lo += term.lo_rational();
    hi += term.hi_rational();
  }
  CHECK(report.partial_sum.lo_rational() <= lo);
  CHECK(hi <= report.partial_sum.hi_rational());
  CHECK(report.partial_sum.width() <= Rational(4) * pow2(-32));
  // approx 1.8107
  CHECK(report.partial_sum.lo_rational() > Rational(18106, 10000));
  CHECK(report.partial_sum.hi_rational() < Rational(18108, 10000));
}

TEST_CASE("t_sum_partial hits exact square roots of power-law increments") {
  auto pl = powerlaw_sequence(2);
  auto report = t_sum_partial(pl, Temperature(Rational(1, 2)), 3, 32);
  REQUIRE(report.exact_sum.has_value());
  CHECK(*report.exact_sum == Rational(11, 6));  // 1 + 1/2 + 1/3
}

TEST_CASE("t_sum_partial propagates monotonicity failures") {
  IncreasingSequence bad("dip", [](std::size_t n) {
    return n == 2 ? Rational(-5) : Rational(Int(static_cast<long>(n)));
  });
  CHECK_THROWS_AS(t_sum_partial(bad, Temperature(Rational(1)), 4, 16),
                  MonotonicityError);
  CHECK_THROWS_AS(t_sum_partial(bad, Temperature(Rational(1)), 0, 16), Error);
}

TEST_CASE("probe: geometric family stays bounded") {
  auto geom = geometric_sequence(Rational(1), Rational(1, 2));
  // True limit of the 1/2-power sum is sqrt(2) + 1 = 2.414... < 3.
  auto report = t_convergence_probe(geom, Temperature(Rational(1, 2)),
                                    Rational(3), 200, 32);
  CHECK(report.verdict == TSumReport::Verdict::BoundedSoFar);
  CHECK(report.terms_used == 200);
  CHECK(!report.exceeded_at.has_value());
}

TEST_CASE("probe: harmonic exceedance at the oracle index") {
  auto pl = powerlaw_sequence(2);
  auto report = t_convergence_probe(pl, Temperature(Rational(1, 2)),
                                    Rational(5), 200, 32);
  REQUIRE(report.verdict == TSumReport::Verdict::ExceededBound);
  std::size_t expected = oracle::harmonic_first_exceed(Rational(5));
  CHECK(expected == 83);  // frozen from the oracle
  CHECK(report.exceeded_at == expected);
  REQUIRE(report.exact_sum.has_value());
  CHECK(*report.exact_sum == oracle::power_sum(83, 1));
}

TEST_CASE("probe: telescoping bound at T = 1 never exceeds") {
  auto geom = geometric_sequence(Rational(3, 2), Rational(2, 3));
  auto report = t_convergence_probe(geom, Temperature(Rational(1)),
                                    Rational(3, 2), 500, 32);
  CHECK(report.verdict == TSumReport::Verdict::BoundedSoFar);
  CHECK_THROWS_AS(t_convergence_probe(geom, Temperature(Rational(1)),
                                      Rational(0), 10, 32),
                  Error);
}

TEST_CASE("limit_enclosure") {
  auto geom = geometric_sequence(Rational(1), Rational(1, 2));
  auto iv = limit_enclosure(geom, 10, 10);
  CHECK(iv.contains(Rational(1)));
  CHECK(iv.width() == pow2(-10));

  auto pl1 = powerlaw_sequence(1);  // divergent, no tail bound
  CHECK_THROWS_AS(limit_enclosure(pl1, 4, 10), UnsupportedError);

  // Sparse series sum 2^-(k^2) with tail bound 2 * 2^-((N+1)^2).
  IncreasingSequence sparse("sparse", [](std::size_t n) {
    Rational sum(0);
    for (std::size_t k = 0; k <= n; ++k) {
      sum += pow2(-static_cast<long>(k * k));
    }
    return sum;
  });
  sparse.with_tail_bound([](std::size_t n) {
    long next = static_cast<long>((n + 1) * (n + 1));
    return Rational(2) * pow2(-next);
  });
  Rational deep(0);
  for (std::size_t k = 0; k <= 40; ++k) deep += pow2(-static_cast<long>(k * k));
  auto sparse_iv = limit_enclosure(sparse, 5, 64);
  CHECK(sparse_iv.contains(deep));
}

TEST_CASE("property: T = 1 partial sums telescope on random geometrics") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(1, 40);
  for (int i = 0; i < 50; ++i) {
    long l = num(rng);
    long rn = num(rng);
    Rational rho(rn, rn + 1 + num(rng));
    auto seq = geometric_sequence(Rational(l), rho);
    std::size_t n_terms = 1 + static_cast<std::size_t>(num(rng)) % 20;
    auto report = t_sum_partial(seq, Temperature(Rational(1)), n_terms, 16);
    REQUIRE(report.exact_sum.has_value());
    REQUIRE(*report.exact_sum == seq.term(n_terms) - seq.term(0));
  }
}

TEST_CASE("property: smaller T gives larger partial sums (increments <= 1)") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> num(1, 12);
  std::vector<Rational> temps{Rational(1, 4), Rational(1, 2), Rational(3, 4),
                              Rational(1)};
  for (int i = 0; i < 40; ++i) {
    long rn = num(rng);
    Rational rho(rn, rn + 1 + num(rng));
    auto make = [&] { return geometric_sequence(Rational(1), rho); };
    for (std::size_t a = 0; a + 1 < temps.size(); ++a) {
      auto seq_small = make();
      auto seq_large = make();
      auto small_t = t_sum_partial(seq_small, Temperature(temps[a]), 12, 48);
      auto large_t = t_sum_partial(seq_large, Temperature(temps[a + 1]), 12, 48);
      // Interval-level assertion of sum_{T'} >= sum_T for T' < T.
      REQUIRE(small_t.partial_sum.lo_rational() >=
              large_t.partial_sum.hi_rational() - large_t.partial_sum.width() -
                  small_t.partial_sum.width());
    }
  }
}

TEST_CASE("property: probe verdict agrees with exact closed forms") {
  // Increment bases arranged so every T-power is exactly rational:
  // rho = g^4 and D = d^4 make increments perfect fourth powers.
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> num(1, 3);
  std::vector<Rational> temps{Rational(1, 4), Rational(1, 2), Rational(1)};
  for (int i = 0; i < 30; ++i) {
    Rational g(num(rng), 3 + num(rng));
    Rational rho = g.pow_int(4);
    // Shape the limit so D = L(1 - rho) is a perfect fourth power, making
    // every increment T-power exactly rational for T in {1/4, 1/2, 1}.
    Rational d(num(rng), 1 + num(rng));
    Rational limit = d.pow_int(4) / (Rational(1) - rho);
    for (const auto& t : temps) {
      // Closed form: sum (D rho^n)^T = D^T / (1 - rho^T), all exact here.
      Rational d_pow = *pow_exact(limit * (Rational(1) - rho), t);
      Rational rho_pow = *pow_exact(rho, t);
      Rational full = d_pow / (Rational(1) - rho_pow);
      std::size_t max_terms = 60;

      Rational bound_low = full * Rational(2, 3);
      auto fresh1 = geometric_sequence(limit, rho);
      auto exceeded = t_convergence_probe(fresh1, Temperature(t), bound_low,
                                          max_terms, 48);
      // Exact partial sums: recompute and find the oracle index.
      Rational partial(0);
      std::optional<std::size_t> oracle_at;
      Rational term = d_pow;
      for (std::size_t n = 1; n <= max_terms; ++n) {
        partial += term;
        term *= rho_pow;
        if (!oracle_at && partial > bound_low) oracle_at = n;
      }
      REQUIRE(exceeded.exceeded() == oracle_at.has_value());
      if (oracle_at) REQUIRE(exceeded.exceeded_at == oracle_at);

      Rational bound_high = full + Rational(1);
      auto fresh2 = geometric_sequence(limit, rho);
      auto bounded = t_convergence_probe(fresh2, Temperature(t), bound_high,
                                         max_terms, 48);
      REQUIRE(!bounded.exceeded());
    }
  }
}
