/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#include "relab/machine.hpp"

#include <algorithm>
#include <atomic>
#include <utility>

#include "relab/parallel.hpp"

namespace relab {

bool is_valid_bits(const Bits& s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c == '0' || c == '1'; });
}

bool is_proper_prefix(const Bits& p, const Bits& s) {
  return p.size() < s.size() && s.compare(0, p.size(), p) == 0;
}

bool canonical_less(const Bits& a, const Bits& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::optional<PrefixViolation> check_prefix_free(std::vector<Bits> programs) {
  // In lexicographic order every extension of p follows p immediately
  // (anything strictly between them would also extend p), so one adjacent
  // scan finds the lexicographically first violating pair.
  std::sort(programs.begin(), programs.end());
  for (std::size_t i = 0; i + 1 < programs.size(); ++i) {
    if (is_proper_prefix(programs[i], programs[i + 1])) {
      return PrefixViolation{programs[i], programs[i + 1]};
    }
  }
  return std::nullopt;
}

namespace {

std::string shown(const Bits& s) { return s.empty() ? "(empty)" : s; }

void require_prefix_free(const std::vector<Bits>& programs,
                         const std::string& context) {
  if (auto v = check_prefix_free(programs)) {
    throw Error(context + ": program " + shown(v->prefix) +
                " is a proper prefix of " + shown(v->extension));
  }
}

}  // namespace

KraftResult kraft_check(const std::vector<Bits>& programs) {
  require_prefix_free(programs, "kraft_check");
  Rational sum(0);
  for (const auto& p : programs) {
    sum += pow2(-static_cast<long>(p.size()));
  }
  return KraftResult{sum, sum <= Rational(1)};
}

PrefixMachine::PrefixMachine(std::string id, std::vector<MachineEntry> entries)
    : id_(std::move(id)), entries_(std::move(entries)) {
  std::vector<Bits> programs;
  programs.reserve(entries_.size());
  for (const auto& e : entries_) {
    if (!is_valid_bits(e.program) || !is_valid_bits(e.output)) {
      throw Error("machine " + id_ + ": entry " + shown(e.program) + " -> " +
                  shown(e.output) + " is not over the binary alphabet");
    }
    if (e.steps == 0) {
      throw Error("machine " + id_ + ": entry " + shown(e.program) +
                  " declares zero steps");
    }
    programs.push_back(e.program);
  }
  require_prefix_free(programs, "machine " + id_);
  kraft_ = Rational(0);
  std::size_t max_len = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (!by_program_.emplace(e.program, i).second) {
      throw Error("machine " + id_ + ": duplicate program " +
                  shown(e.program));
    }
    kraft_ += pow2(-static_cast<long>(e.program.size()));
    max_len = std::max(max_len, e.program.size());
  }
  if (kraft_ > Rational(1)) {
    throw Error("machine " + id_ + ": Kraft sum " + kraft_.str() +
                " exceeds 1");
  }
  by_value_.resize(std::min<std::size_t>(max_len, 63) + 1);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Bits& p = entries_[i].program;
    if (p.size() > 63) continue;
    std::uint64_t v = 0;
    for (char c : p) v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    by_value_[p.size()].emplace(v, i);
  }
}

PrefixMachine PrefixMachine::table(
    std::string id, const std::vector<std::pair<Bits, Bits>>& entries) {
  std::vector<MachineEntry> full;
  full.reserve(entries.size());
  for (const auto& [p, out] : entries) full.push_back({p, out, 1});
  return PrefixMachine(std::move(id), std::move(full));
}

PrefixMachine PrefixMachine::with_schedule(std::string id,
                                           std::vector<MachineEntry> entries) {
  return PrefixMachine(std::move(id), std::move(entries));
}

std::optional<Bits> PrefixMachine::run(const Bits& program) const {
  auto it = by_program_.find(program);
  if (it == by_program_.end()) return std::nullopt;
  return entries_[it->second].output;
}

std::optional<std::size_t> PrefixMachine::lookup_numeric(
    int length, std::uint64_t value) const {
  if (length < 0 || static_cast<std::size_t>(length) >= by_value_.size()) {
    return std::nullopt;
  }
  const auto& m = by_value_[static_cast<std::size_t>(length)];
  auto it = m.find(value);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

PrefixMachine build_universal(
    std::string id, const std::vector<const PrefixMachine*>& family) {
  std::vector<MachineEntry> entries;
  for (std::size_t i = 0; i < family.size(); ++i) {
    Bits header(i, '0');
    header.push_back('1');
    for (const auto& e : family[i]->entries()) {
      entries.push_back({header + e.program, e.output,
                         e.steps + static_cast<std::uint64_t>(i) + 1});
    }
  }
  return PrefixMachine::with_schedule(std::move(id), std::move(entries));
}

std::vector<EnumerationEvent> enumerate_domain(const PrefixMachine& machine,
                                               std::uint64_t budget) {
  std::vector<EnumerationEvent> events;
  const auto& entries = machine.entries();
  for (std::size_t j = 0; j < entries.size(); ++j) {
    const auto& e = entries[j];
    std::uint64_t first_round =
        std::max<std::uint64_t>(static_cast<std::uint64_t>(j) + 1, e.steps);
    if (first_round > budget) continue;
    events.push_back(
        {e.program, e.output, 0, e.steps, first_round, machine.id()});
  }
  std::sort(events.begin(), events.end(),
            [](const EnumerationEvent& a, const EnumerationEvent& b) {
              if (a.first_round != b.first_round)
                return a.first_round < b.first_round;
              if (a.steps != b.steps) return a.steps < b.steps;
              return canonical_less(a.program, b.program);
            });
  for (std::size_t i = 0; i < events.size(); ++i) events[i].discovery_index = i;
  return events;
}

std::optional<int> brute_force_H(const PrefixMachine& machine, const Bits& s,
                                 int lmax, int workers) {
  if (lmax < 0) throw Error("brute_force_H: negative length cap");
  if (lmax > 34) {
    throw UnsupportedError(
        "brute_force_H: 2^" + std::to_string(lmax + 1) +
        " candidate programs is past the feasible search budget");
  }
  for (int len = 0; len <= lmax; ++len) {
    std::uint64_t count = std::uint64_t{1} << len;
    std::atomic<bool> found{false};
    parallel_chunks(
        static_cast<std::size_t>(count), workers,
        [&](std::size_t, std::size_t begin, std::size_t end) {
          for (std::uint64_t v = begin; v < end; ++v) {
            if (found.load(std::memory_order_relaxed)) return;
            auto idx = machine.lookup_numeric(len, v);
            if (idx && machine.entries()[*idx].output == s) {
              // Only the length is reported, so first-hit races between
              // chunks cannot change the result.
              found.store(true, std::memory_order_relaxed);
              return;
            }
          }
        });
    if (found.load()) return len;
  }
  return std::nullopt;
}

}  // namespace relab
