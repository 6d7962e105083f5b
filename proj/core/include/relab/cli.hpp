/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "relab/rational.hpp"
#include "relab/sequences.hpp"

namespace relab::cli {

/// A fully resolved batch experiment. Running a plan is deterministic:
/// identical (plan, seed) produce identical output bytes, whatever the
/// worker count.
struct ExperimentPlan {
  std::string command;  // machine|omega|tsum|dominate|split|profile|mltest|dim

  std::string machine_path;  // --machine
  std::string test_path;     // --test
  std::string family_a;      // --a
  std::string family_b;      // --b
  std::string family_c;      // --c
  std::string source;        // --source, rational as p/q

  Rational T = Rational(1);          // --T
  int prec = 32;                     // --prec
  std::uint64_t budget = 256;        // --budget
  std::size_t N = 16;                // --N / --nmax
  int lmax = 12;                     // --Lmax
  unsigned long c_max = 1024;        // --cmax
  unsigned long c = 0;               // --c, 0 = search
  std::size_t window = 8;            // --window
  Rational slack = Rational(1, 8);   // --slack
  Rational bound = Rational(0);      // --bound, 0 = plain partial sum
  std::size_t max_terms = 256;       // --max-terms
  Rational r = Rational(1);          // --r
  Rational eps = Rational(0);        // --eps, 0 = pick via epsilon search
  std::size_t kmax = 0;              // --kmax, 0 = skip membership report
  std::uint64_t seed = 0;            // --seed
  int workers = 1;                   // --workers, never affects output bytes
  std::string format = "records";    // --format records|csv
};

/// Executes the plan, one line-delimited record per result row on `out`.
/// Returns 0 on completion; validation and input errors print a single
/// diagnostic line on `err` and return 1.
int run(const ExperimentPlan& plan, std::ostream& out, std::ostream& err);

/// Builds a sequence from a family spec:
///   geom:L,rho         a_n = L(1 - rho^n)
///   powerlaw:s         increments (n+1)^-s, integer s >= 1
///   omega:path,T       halting-sum lower bounds of the machine spec at T
IncreasingSequence make_family(const std::string& spec, std::uint64_t budget,
                               int prec);

}  // namespace relab::cli
