/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "relab/dyadic.hpp"
#include "relab/machine.hpp"
#include "relab/verdict.hpp"

namespace relab {

/// Supplies bits of the base-two expansion of a real's fractional part,
/// under the convention that dyadic rationals take the terminating
/// expansion (the one with infinitely many zeros).
class BitSource {
 public:
  using Refiner = std::function<DyadicInterval(int)>;

  /// Exact rational source; every requested prefix is available.
  static BitSource exact(const Rational& value);

  /// Enclosure-driven source: `refine(prec)` must return enclosures that
  /// never widen as prec grows. Bits are emitted only when some refinement
  /// separates the value from every dyadic boundary at the requested
  /// resolution; otherwise the prefix is Unknown.
  static BitSource enclosure(std::string description, Refiner refine,
                             int max_prec = 512);

  const std::string& description() const { return description_; }

  /// First n bits after the binary point, or nullopt when undetermined.
  std::optional<Bits> bits(std::size_t n) const;

 private:
  BitSource() = default;
  std::string description_;
  std::optional<Rational> exact_;
  Refiner refine_;
  int max_prec_ = 0;
};

/// The first n bits of src (n >= 1), Unknown when the source cannot
/// determine them.
std::optional<Bits> rest_bits(const BitSource& src, std::size_t n);

/// H(first n bits) for n = 1..nmax by exhaustive search on `machine`.
/// Profile construction parallelizes over n; verdicts downstream are pure
/// functions of the profile.
ComplexityProfile complexity_profile(const PrefixMachine& machine,
                                     const BitSource& src, std::size_t nmax,
                                     int lmax, int workers = 1);

struct WeakChaitinRow {
  std::size_t n = 0;
  TriVerdict verdict = TriVerdict::Unknown;
};

/// Per-n check of T n - c <= H(first n bits). Unknown H gives an Unknown
/// row. `witness` is min over known n of H - T n: the check passes
/// everywhere with constant c exactly when c >= -witness, so it reports the
/// best constant, not just the supplied one. Accepts any rational T >= 0
/// (the degenerate T = 0 included).
struct WeakChaitinReport {
  std::vector<WeakChaitinRow> rows;
  std::optional<Rational> witness;
  std::optional<std::size_t> first_fail;
  bool all_known_hold = true;
};

WeakChaitinReport weak_chaitin_T_check(const ComplexityProfile& profile,
                                       const Rational& T, const Rational& c);

/// Ratios H(n)/n and their maximum over the trailing window, with the
/// declared slack: "consistent with T-compressible" iff the window max is
/// at most T + slack. The o(n) term is unobservable at finite n; slack is
/// explicit, never hidden.
struct CompressibilityReport {
  std::vector<std::pair<std::size_t, Rational>> ratios;  // known entries only
  std::size_t window = 0;
  Rational slack;
  std::optional<Rational> window_max;
  std::optional<bool> consistent;  // nullopt when the window has no data
};

CompressibilityReport t_compressibility_trend(
    const ComplexityProfile& profile, const Rational& T,
    std::optional<std::size_t> window = std::nullopt,
    const Rational& slack = Rational(1, 8));

/// Differences H(n) - T n for known entries; purely descriptive, no limit
/// verdict is claimed.
std::vector<std::pair<std::size_t, Rational>> chaitin_T_trend(
    const ComplexityProfile& profile, const Rational& T);

/// Minimum of H(n)/n over the last `window` positions of the profile
/// (finite surrogate of the liminf); Unknown when every entry in that
/// window is unknown.
std::optional<Rational> dimension_estimate(const ComplexityProfile& profile,
                                           std::size_t window);

/// A finitely presented Martin-Loef T-test: levels of (n, s) pairs with
/// n >= 1, weighted per level by 2^(-T|s|).
struct MLTTest {
  Temperature T;
  std::vector<std::pair<int, Bits>> pairs;

  std::vector<int> level_numbers() const;
  std::vector<const Bits*> level(int n) const;
};

/// File format: lines "level <n>: <bits>" ("-" for the empty string);
/// '#' comments.
MLTTest parse_ml_test_file(std::istream& in, const Rational& T,
                           const std::string& source_name = "<input>");
MLTTest load_ml_test_file(const std::string& path, const Rational& T);

struct MLValidateRow {
  int level = 0;
  TriVerdict verdict = TriVerdict::Unknown;  // Holds = the measure condition passes
  Rational sum_lo;  // certified bounds on the level sum
  Rational sum_hi;
  bool exact = false;  // every exponent T|s| was an integer
};

/// Per-level check of sum over C_n of 2^(-T|s|) <= 2^-n. The exact path is
/// taken whenever all exponents are integers, so boundary instances decide
/// cleanly; otherwise enclosures compare and overlap reports Unknown.
std::vector<MLValidateRow> ml_t_test_validate(const MLTTest& test, int prec);

struct MLMemberRow {
  int level = 0;
  std::vector<std::size_t> hits;  // k <= kmax with (first k bits) in C_n
  bool unknown_bits = false;
};

/// Membership evidence for the requested levels: which prefixes of src lie
/// in C_n. Refuses to run when validation reports any failing level.
/// Finite hits prove nothing about randomness either way; the report is
/// evidence only.
std::vector<MLMemberRow> ml_t_test_member(const MLTTest& test,
                                          const BitSource& src,
                                          const std::vector<int>& levels,
                                          std::size_t kmax, int prec);

}  // namespace relab
