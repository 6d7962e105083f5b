/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#include "relab/randomness.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "relab/parallel.hpp"

namespace relab {

BitSource BitSource::exact(const Rational& value) {
  BitSource src;
  src.description_ = value.str();
  src.exact_ = value;
  return src;
}

BitSource BitSource::enclosure(std::string description, Refiner refine,
                               int max_prec) {
  BitSource src;
  src.description_ = std::move(description);
  src.refine_ = std::move(refine);
  src.max_prec_ = max_prec;
  return src;
}

std::optional<Bits> BitSource::bits(std::size_t n) const {
  if (n == 0) return Bits{};
  if (exact_) {
    // Fractional part, expanded bit by bit; dyadics terminate in zeros.
    Rational f = *exact_ - Rational(exact_->floor());
    Bits out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      f += f;  // f *= 2
      if (f >= Rational(1)) {
        out.push_back('1');
        f -= Rational(1);
      } else {
        out.push_back('0');
      }
    }
    return out;
  }
  // Enclosure-driven: refine until the enclosure avoids every boundary of
  // the 2^-n grid, so all n bits are pinned down.
  for (int prec = static_cast<int>(n) + 2; prec <= max_prec_; prec *= 2) {
    DyadicInterval iv = refine_(prec);
    Rational lo_scaled = iv.lo_rational() * pow2(static_cast<long>(n));
    Rational hi_scaled = iv.hi_rational() * pow2(static_cast<long>(n));
    Int cell = lo_scaled.floor();
    if (lo_scaled > Rational(cell) && hi_scaled < Rational(cell) + Rational(1)) {
      Bits out(n, '0');
      // The n fractional bits are the low n bits of the cell number.
      Int frac = cell;
      for (std::size_t i = 0; i < n; ++i) {
        if (mpz_tstbit(frac.get_mpz_t(), i)) out[n - 1 - i] = '1';
      }
      return out;
    }
  }
  return std::nullopt;
}

std::optional<Bits> rest_bits(const BitSource& src, std::size_t n) {
  if (n < 1) throw Error("rest_bits: n must be >= 1");
  return src.bits(n);
}

ComplexityProfile complexity_profile(const PrefixMachine& machine,
                                     const BitSource& src, std::size_t nmax,
                                     int lmax, int workers) {
  ComplexityProfile profile;
  profile.subject = src.description();
  profile.machine_id = machine.id();
  profile.search_limit = lmax;
  if (nmax == 0) return profile;

  struct Cell {
    bool have_bits = false;
    std::optional<int> h;
  };
  std::vector<Cell> cells(nmax);
  parallel_chunks(nmax, workers,
                  [&](std::size_t, std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      auto prefix = src.bits(i + 1);
                      if (!prefix) continue;
                      cells[i].have_bits = true;
                      cells[i].h = brute_force_H(machine, *prefix, lmax, 1);
                    }
                  });
  for (std::size_t i = 0; i < nmax; ++i) {
    if (cells[i].have_bits) profile.entries[i + 1] = cells[i].h;
  }
  return profile;
}

WeakChaitinReport weak_chaitin_T_check(const ComplexityProfile& profile,
                                       const Rational& T, const Rational& c) {
  if (T.is_negative()) throw Error("weak_chaitin_T_check: T must be >= 0");
  if (c.is_negative()) throw Error("weak_chaitin_T_check: c must be >= 0");
  WeakChaitinReport report;
  for (const auto& [n, h] : profile.entries) {
    WeakChaitinRow row{n, TriVerdict::Unknown};
    if (h) {
      Rational lhs = T * Rational(Int(static_cast<long>(n))) - c;
      row.verdict = lhs <= Rational(*h) ? TriVerdict::Holds : TriVerdict::Fails;
      Rational margin = Rational(*h) - T * Rational(Int(static_cast<long>(n)));
      if (!report.witness || margin < *report.witness) {
        report.witness = margin;
      }
      if (row.verdict == TriVerdict::Fails) {
        report.all_known_hold = false;
        if (!report.first_fail) report.first_fail = n;
      }
    }
    report.rows.push_back(row);
  }
  return report;
}

CompressibilityReport t_compressibility_trend(
    const ComplexityProfile& profile, const Rational& T,
    std::optional<std::size_t> window, const Rational& slack) {
  if (T.is_negative()) throw Error("t_compressibility_trend: T must be >= 0");
  CompressibilityReport report;
  report.slack = slack;
  std::size_t nmax = profile.entries.empty() ? 0 : profile.entries.rbegin()->first;
  report.window = window.value_or(std::max<std::size_t>(nmax / 2, 1));
  for (const auto& [n, h] : profile.entries) {
    if (!h) continue;
    report.ratios.emplace_back(
        n, Rational(Int(static_cast<long>(*h)), Int(static_cast<long>(n))));
  }
  std::size_t window_start = nmax >= report.window ? nmax - report.window + 1 : 1;
  for (const auto& [n, ratio] : report.ratios) {
    if (n < window_start) continue;
    if (!report.window_max || ratio > *report.window_max) {
      report.window_max = ratio;
    }
  }
  if (report.window_max) {
    report.consistent = *report.window_max <= T + slack;
  }
  return report;
}

std::vector<std::pair<std::size_t, Rational>> chaitin_T_trend(
    const ComplexityProfile& profile, const Rational& T) {
  std::vector<std::pair<std::size_t, Rational>> rows;
  for (const auto& [n, h] : profile.entries) {
    if (!h) continue;
    rows.emplace_back(n,
                      Rational(*h) - T * Rational(Int(static_cast<long>(n))));
  }
  return rows;
}

std::optional<Rational> dimension_estimate(const ComplexityProfile& profile,
                                           std::size_t window) {
  if (window < 1) throw Error("dimension_estimate: window must be >= 1");
  if (profile.entries.size() < window) {
    throw Error("dimension_estimate: profile has " +
                std::to_string(profile.entries.size()) +
                " entries, window needs " + std::to_string(window));
  }
  std::optional<Rational> best;
  auto it = profile.entries.rbegin();
  for (std::size_t i = 0; i < window && it != profile.entries.rend();
       ++i, ++it) {
    if (!it->second) continue;
    Rational ratio(Int(static_cast<long>(*it->second)),
                   Int(static_cast<long>(it->first)));
    if (!best || ratio < *best) best = ratio;
  }
  return best;
}

std::vector<int> MLTTest::level_numbers() const {
  std::set<int> seen;
  for (const auto& [n, s] : pairs) seen.insert(n);
  return {seen.begin(), seen.end()};
}

std::vector<const Bits*> MLTTest::level(int n) const {
  std::vector<const Bits*> out;
  for (const auto& [m, s] : pairs) {
    if (m == n) out.push_back(&s);
  }
  return out;
}

MLTTest parse_ml_test_file(std::istream& in, const Rational& T,
                           const std::string& source_name) {
  MLTTest test{Temperature(T), {}};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string where =
        source_name + ":" + std::to_string(lineno) + " '" + line + "'";
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    if (keyword != "level") {
      throw ParseError(where + ": expected 'level <n>: <bits>'");
    }
    std::string level_token, bits_token;
    if (!(fields >> level_token >> bits_token)) {
      throw ParseError(where + ": expected 'level <n>: <bits>'");
    }
    if (!level_token.empty() && level_token.back() == ':') {
      level_token.pop_back();
    }
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(level_token, &used);
      if (used != level_token.size()) throw std::exception();
    } catch (...) {
      throw ParseError(where + ": malformed level number '" + level_token + "'");
    }
    if (n <= 0) throw ParseError(where + ": level must be >= 1");
    Bits s = bits_token == "-" ? Bits{} : bits_token;
    if (!is_valid_bits(s)) {
      throw ParseError(where + ": '" + bits_token + "' is not a bitstring");
    }
    test.pairs.emplace_back(n, std::move(s));
  }
  return test;
}

MLTTest load_ml_test_file(const std::string& path, const Rational& T) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open ML test file '" + path + "'");
  return parse_ml_test_file(in, T, path);
}

std::vector<MLValidateRow> ml_t_test_validate(const MLTTest& test, int prec) {
  std::vector<MLValidateRow> rows;
  for (int n : test.level_numbers()) {
    MLValidateRow row;
    row.level = n;
    Rational exact_part(0);
    std::optional<DyadicInterval> interval_part;
    bool all_exact = true;
    for (const Bits* s : test.level(n)) {
      Rational exponent =
          -test.T.value() * Rational(Int(static_cast<long>(s->size())));
      if (auto exact = two_pow_exact(exponent)) {
        exact_part += *exact;
      } else {
        all_exact = false;
        DyadicInterval term = two_pow_interval(exponent, prec);
        interval_part = interval_part ? *interval_part + term : term;
      }
    }
    row.exact = all_exact;
    row.sum_lo = exact_part;
    row.sum_hi = exact_part;
    if (interval_part) {
      row.sum_lo += interval_part->lo_rational();
      row.sum_hi += interval_part->hi_rational();
    }
    Rational threshold = pow2(-n);
    if (row.sum_hi <= threshold) {
      row.verdict = TriVerdict::Holds;
    } else if (row.sum_lo > threshold) {
      row.verdict = TriVerdict::Fails;
    } else {
      row.verdict = TriVerdict::Unknown;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<MLMemberRow> ml_t_test_member(const MLTTest& test,
                                          const BitSource& src,
                                          const std::vector<int>& levels,
                                          std::size_t kmax, int prec) {
  for (const auto& row : ml_t_test_validate(test, prec)) {
    if (row.verdict == TriVerdict::Fails) {
      throw Error("ml_t_test_member: level " + std::to_string(row.level) +
                  " fails the measure condition; not a Martin-Loef T-test");
    }
  }
  std::vector<MLMemberRow> rows;
  for (int n : levels) {
    MLMemberRow row;
    row.level = n;
    auto members = test.level(n);
    for (std::size_t k = 1; k <= kmax; ++k) {
      auto prefix = src.bits(k);
      if (!prefix) {
        row.unknown_bits = true;
        continue;
      }
      for (const Bits* s : members) {
        if (*s == *prefix) {
          row.hits.push_back(k);
          break;
        }
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace relab
