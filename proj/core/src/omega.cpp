/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#include "relab/omega.hpp"

#include <memory>
#include <unordered_map>
#include <utility>

#include "relab/dyadic.hpp"

namespace relab {

namespace {

struct Term {
  Rational lower;     // certified rational lower bound of 2^(-plen/T), > 0
  Rational width;     // enclosure width, 0 when exact
  DyadicInterval interval;
  bool exact;
};

// Rounds 2^(-plen/T) down at precision prec + index, widened enough that
// the rounded value stays positive (the grid must be finer than the term).
Term halting_term(std::size_t index, std::size_t plen, const Temperature& T,
                  int prec) {
  Rational exponent = -Rational(Int(static_cast<long>(plen))) / T.value();
  if (auto exact = two_pow_exact(exponent)) {
    auto d = Dyadic::from_rational(*exact);
    return Term{*exact, Rational(0), DyadicInterval::point(*d, prec), true};
  }
  long magnitude = exponent.floor().get_si();  // 2^exponent >= 2^magnitude
  int term_prec = prec + static_cast<int>(index) +
                  static_cast<int>(magnitude < 0 ? -magnitude : 0) + 1;
  DyadicInterval iv = two_pow_interval(exponent, term_prec);
  return Term{iv.lo_rational(), iv.width(), iv, false};
}

}  // namespace

OmegaApproximation omega_lower(const PrefixMachine& machine, const Rational& T,
                               std::uint64_t budget, int prec) {
  Temperature temp(T);
  OmegaApproximation approx;
  approx.machine_id = machine.id();
  approx.temperature = T;
  approx.prec = prec;
  approx.budget = budget;

  auto events = enumerate_domain(machine, budget);
  Rational running(0);
  std::optional<DyadicInterval> total;
  bool all_exact = true;
  for (const auto& ev : events) {
    Term term = halting_term(ev.discovery_index, ev.program.size(), temp, prec);
    running += term.lower;
    all_exact = all_exact && term.exact;
    total = total ? *total + term.interval : term.interval;
    approx.lower_bounds.push_back(running);
    approx.trace.push_back(
        {ev.discovery_index, ev.program.size(), running, term.width});
  }
  approx.fully_enumerated = events.size() == machine.entries().size();
  if (approx.fully_enumerated && total) {
    approx.enclosure = *total;
    if (all_exact) approx.exact_total = running;
  } else if (approx.fully_enumerated) {
    approx.enclosure = DyadicInterval::point(Dyadic(0), prec);
    approx.exact_total = Rational(0);
  }
  return approx;
}

TSumReport omega_t_convergence_report(const PrefixMachine& machine,
                                      const Rational& T, std::uint64_t budget,
                                      int prec) {
  Temperature temp(T);
  auto events = enumerate_domain(machine, budget);
  Rational sum(0);
  for (const auto& ev : events) {
    // Increment i of the halting-sum sequence is 2^(-|p_i|/T); its T-th
    // power is resolved on exponents, not through enclosures.
    Rational neg_len = -Rational(Int(static_cast<long>(ev.program.size())));
    Rational exponent = (neg_len / T) * T;
    if (!exponent.is_integer() || exponent != neg_len) {
      throw Error("omega: exponent algebra failed at event " +
                  std::to_string(ev.discovery_index));
    }
    sum += *two_pow_exact(exponent);
  }
  auto point = Dyadic::from_rational(sum);
  return TSumReport{DyadicInterval::point(*point, prec),
                    sum,
                    events.size(),
                    sum > Rational(1) ? TSumReport::Verdict::ExceededBound
                                      : TSumReport::Verdict::BoundedSoFar,
                    Rational(1),
                    sum > Rational(1)
                        ? std::optional<std::size_t>(events.size())
                        : std::nullopt};
}

MPowerReport sum_m_power(const PrefixMachine& machine, const Rational& T,
                         std::uint64_t budget, int lmax, int prec) {
  Temperature temp(T);
  MPowerReport report;
  report.machine_id = machine.id();
  report.temperature = T;
  report.lmax = lmax;

  auto events = enumerate_domain(machine, budget);
  std::unordered_map<Bits, std::size_t> output_slot;
  struct Slot {
    int best_len;
    Rational term_lower;
    bool exact;
  };
  std::vector<Slot> slots;
  std::vector<Bits> outputs;
  Rational running(0);
  for (const auto& ev : events) {
    std::size_t plen = ev.program.size();
    if (plen <= static_cast<std::size_t>(lmax)) {
      // Terms reuse the event-indexed rounding of omega_lower, so each
      // bound is a subsum of the corresponding omega bound.
      auto it = output_slot.find(ev.output);
      if (it == output_slot.end()) {
        Term term = halting_term(ev.discovery_index, plen, temp, prec);
        output_slot.emplace(ev.output, slots.size());
        slots.push_back({static_cast<int>(plen), term.lower, term.exact});
        outputs.push_back(ev.output);
        running += term.lower;
      } else if (static_cast<int>(plen) < slots[it->second].best_len) {
        Term term = halting_term(ev.discovery_index, plen, temp, prec);
        running += term.lower - slots[it->second].term_lower;
        slots[it->second] = {static_cast<int>(plen), term.lower, term.exact};
      }
    }
    report.bounds.push_back(running);
  }
  bool all_exact = true;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    report.best_lengths.emplace_back(outputs[i], slots[i].best_len);
    all_exact = all_exact && slots[i].exact;
  }
  if (all_exact) report.exact_final = running;
  return report;
}

IncreasingSequence omega_sequence(const PrefixMachine& machine,
                                  const Rational& T, std::uint64_t budget,
                                  int prec) {
  auto approx = std::make_shared<OmegaApproximation>(
      omega_lower(machine, T, budget, prec));
  std::string name = "omega:" + machine.id() + "," + T.str();
  IncreasingSequence seq(name, [approx](std::size_t n) {
    return n == 0 ? Rational(0) : approx->lower_bounds[n - 1];
  });
  seq.with_length(approx->lower_bounds.size() + 1);
  if (approx->exact_total) seq.with_exact_limit(*approx->exact_total);
  if (approx->enclosure) {
    Rational hi = approx->enclosure->hi_rational();
    auto bounds = approx;
    seq.with_tail_bound([bounds, hi](std::size_t n) {
      Rational a_n = n == 0 ? Rational(0) : bounds->lower_bounds[n - 1];
      return hi - a_n;
    });
  }
  // Increments are rounded-down copies of 2^(-|p_i|/T), so for T' >= T the
  // increment T'-power sum is at most the enumerated Kraft mass.
  Rational kraft_enumerated(0);
  for (const auto& row : approx->trace) {
    kraft_enumerated += pow2(-static_cast<long>(row.program_length));
  }
  Rational t_here = T;
  seq.with_t_sum_certificate(
      [kraft_enumerated, t_here](
          const Temperature& other) -> std::optional<Rational> {
        if (other.value() < t_here) return std::nullopt;
        return kraft_enumerated;
      });
  return seq;
}

}  // namespace relab
