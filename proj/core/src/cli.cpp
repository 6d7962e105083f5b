/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#include "relab/cli.hpp"

#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "relab/errors.hpp"
#include "relab/machine_io.hpp"
#include "relab/omega.hpp"
#include "relab/randomness.hpp"
#include "relab/reducibility.hpp"
#include "relab/splitting.hpp"

namespace relab::cli {

namespace {

struct Row {
  std::vector<std::pair<std::string, std::string>> kv;

  Row& add(std::string key, std::string value) {
    kv.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  Row& add(std::string key, const Rational& r) {
    return add(std::move(key), r.str());
  }
  Row& add(std::string key, bool v) {
    return add(std::move(key), std::string(v ? "true" : "false"));
  }
  template <typename T>
    requires(std::is_integral_v<T> && !std::is_same_v<T, bool>)
  Row& add(std::string key, T v) {
    return add(std::move(key), std::to_string(v));
  }
};

std::string csv_escape(const std::string& v) {
  if (v.find_first_of(",\"") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

class RecordStream {
 public:
  RecordStream(std::ostream& out, bool csv) : out_(out), csv_(csv) {}

  void emit(const Row& row) {
    if (!csv_) {
      bool first = true;
      for (const auto& [k, v] : row.kv) {
        if (!first) out_ << ' ';
        out_ << k << '=' << v;
        first = false;
      }
      out_ << '\n';
      return;
    }
    std::string header;
    for (const auto& [k, v] : row.kv) {
      if (!header.empty()) header += ',';
      header += k;
    }
    if (header != last_header_) {
      out_ << header << '\n';
      last_header_ = header;
    }
    bool first = true;
    for (const auto& [k, v] : row.kv) {
      if (!first) out_ << ',';
      out_ << csv_escape(v);
      first = false;
    }
    out_ << '\n';
  }

 private:
  std::ostream& out_;
  bool csv_;
  std::string last_header_;
};

std::string shown_bits(const Bits& b) { return b.empty() ? "-" : b; }

std::string shown_or(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "unknown";
}

// Shared provenance suffix.
void stamp(Row& row, const ExperimentPlan& plan, const std::string& machine) {
  row.add("machine", machine.empty() ? "-" : machine)
      .add("T", plan.T)
      .add("budget", plan.budget)
      .add("prec", plan.prec);
}

std::pair<std::string, std::string> split_once(const std::string& text,
                                               char sep, bool from_back) {
  auto pos = from_back ? text.rfind(sep) : text.find(sep);
  if (pos == std::string::npos) {
    throw ParseError("family spec: expected '" + std::string(1, sep) +
                     "' in '" + text + "'");
  }
  return {text.substr(0, pos), text.substr(pos + 1)};
}

TSumReport::Verdict probe_verdict(const TSumReport& r) { return r.verdict; }

std::string verdict_name(const TSumReport& r) {
  return probe_verdict(r) == TSumReport::Verdict::BoundedSoFar
             ? "bounded_so_far"
             : "exceeded_bound";
}

int run_machine(const ExperimentPlan& plan, RecordStream& rs) {
  PrefixMachine machine = load_machine_spec(plan.machine_path);
  KraftResult kraft{machine.kraft_sum(), machine.kraft_sum() <= Rational(1)};
  Row head;
  head.add("type", std::string("machine"))
      .add("id", machine.id())
      .add("entries", machine.entries().size())
      .add("kraft", kraft.sum)
      .add("kraft_ok", kraft.ok)
      .add("prefix_free", true);
  stamp(head, plan, machine.id());
  rs.emit(head);
  for (std::size_t i = 0; i < machine.entries().size(); ++i) {
    const auto& e = machine.entries()[i];
    Row row;
    row.add("type", std::string("entry"))
        .add("index", i)
        .add("program", shown_bits(e.program))
        .add("output", shown_bits(e.output))
        .add("steps", e.steps);
    stamp(row, plan, machine.id());
    rs.emit(row);
  }
  for (const auto& ev : enumerate_domain(machine, plan.budget)) {
    Row row;
    row.add("type", std::string("event"))
        .add("index", ev.discovery_index)
        .add("program", shown_bits(ev.program))
        .add("output", shown_bits(ev.output))
        .add("steps", ev.steps)
        .add("first_round", ev.first_round);
    stamp(row, plan, machine.id());
    rs.emit(row);
  }
  return 0;
}

int run_omega(const ExperimentPlan& plan, RecordStream& rs) {
  PrefixMachine machine = load_machine_spec(plan.machine_path);
  OmegaApproximation approx =
      omega_lower(machine, plan.T, plan.budget, plan.prec);
  for (const auto& t : approx.trace) {
    Row row;
    row.add("type", std::string("trace"))
        .add("index", t.index)
        .add("plen", t.program_length)
        .add("lower", t.lower_bound)
        .add("width", t.term_width);
    stamp(row, plan, machine.id());
    rs.emit(row);
  }
  Row summary;
  summary.add("type", std::string("omega"))
      .add("events", approx.lower_bounds.size())
      .add("final_lower", approx.lower_bounds.empty()
                              ? Rational(0)
                              : approx.lower_bounds.back())
      .add("fully_enumerated", approx.fully_enumerated);
  if (approx.enclosure) {
    summary.add("enclosure_lo", approx.enclosure->lo_rational())
        .add("enclosure_hi", approx.enclosure->hi_rational());
  }
  if (approx.exact_total) summary.add("exact", *approx.exact_total);
  stamp(summary, plan, machine.id());
  rs.emit(summary);

  TSumReport conv =
      omega_t_convergence_report(machine, plan.T, plan.budget, plan.prec);
  Row conv_row;
  conv_row.add("type", std::string("tconv"))
      .add("terms", conv.terms_used)
      .add("exact_sum", conv.exact_sum ? conv.exact_sum->str() : "-")
      .add("verdict", verdict_name(conv));
  stamp(conv_row, plan, machine.id());
  rs.emit(conv_row);

  MPowerReport mp =
      sum_m_power(machine, plan.T, plan.budget, plan.lmax, plan.prec);
  Row mp_row;
  mp_row.add("type", std::string("mpower"))
      .add("lmax", mp.lmax)
      .add("outputs", mp.best_lengths.size())
      .add("final", mp.bounds.empty() ? Rational(0) : mp.bounds.back());
  if (mp.exact_final) mp_row.add("exact", *mp.exact_final);
  stamp(mp_row, plan, machine.id());
  rs.emit(mp_row);
  return 0;
}

int run_tsum(const ExperimentPlan& plan, RecordStream& rs) {
  IncreasingSequence seq = make_family(plan.family_a, plan.budget, plan.prec);
  Temperature T(plan.T);
  TSumReport report =
      plan.bound.is_positive()
          ? t_convergence_probe(seq, T, plan.bound, plan.max_terms, plan.prec)
          : t_sum_partial(seq, T, plan.N, plan.prec);
  Row row;
  row.add("type", std::string("tsum"))
      .add("family", seq.name())
      .add("terms", report.terms_used)
      .add("sum_lo", report.partial_sum.lo_rational())
      .add("sum_hi", report.partial_sum.hi_rational())
      .add("exact", report.exact_sum ? report.exact_sum->str() : "-")
      .add("verdict", verdict_name(report));
  if (report.bound) row.add("bound", *report.bound);
  if (report.exceeded_at) row.add("exceeded_at", *report.exceeded_at);
  stamp(row, plan, "");
  rs.emit(row);
  return 0;
}

int run_dominate(const ExperimentPlan& plan, RecordStream& rs) {
  IncreasingSequence a = make_family(plan.family_a, plan.budget, plan.prec);
  IncreasingSequence b = make_family(plan.family_b, plan.budget, plan.prec);
  Temperature T(plan.T);
  DyadicInterval alpha = best_limit_enclosure(a, plan.N, plan.prec);
  DyadicInterval beta = best_limit_enclosure(b, plan.N, plan.prec);

  FamilyMember member;
  member.name = b.name();
  member.seq = &b;
  member.enclosure = beta;
  if (auto cert = b.certified_t_sum_upper(T)) {
    member.t_evidence =
        t_convergence_probe(b, T, *cert, plan.max_terms, plan.prec);
  } else if (plan.bound.is_positive()) {
    member.t_evidence =
        t_convergence_probe(b, T, plan.bound, plan.max_terms, plan.prec);
  }

  std::vector<FamilyMember> family;
  family.push_back(std::move(member));
  auto rows = omega_t_likeness_check(a, alpha, family, plan.N, plan.c_max);
  for (const auto& r : rows) {
    Row row;
    row.add("type", std::string("dominate"))
        .add("a", a.name())
        .add("b", r.member)
        .add("N", plan.N)
        .add("cmax", plan.c_max)
        .add("evidence", r.evidence_ok)
        .add("c", r.constant ? std::to_string(*r.constant) : "none");
    if (!r.evidence_ok) row.add("reason", r.reject_reason);
    stamp(row, plan, "");
    rs.emit(row);
  }
  if (plan.c > 0) {
    DominationInstance inst{a, b, alpha, beta, plan.c};
    auto verdicts = domination_check(inst, plan.N);
    for (std::size_t n = 0; n < verdicts.size(); ++n) {
      Row row;
      row.add("type", std::string("verdict"))
          .add("a", a.name())
          .add("b", b.name())
          .add("c", plan.c)
          .add("index", n)
          .add("verdict", std::string(to_string(verdicts[n])));
      stamp(row, plan, "");
      rs.emit(row);
    }
  }
  return 0;
}

int run_split(const ExperimentPlan& plan, RecordStream& rs) {
  IncreasingSequence a = make_family(plan.family_a, plan.budget, plan.prec);
  IncreasingSequence c = make_family(plan.family_c, plan.budget, plan.prec);
  Rational eps = plan.eps;
  if (!eps.is_positive()) {
    Temperature T(plan.T);
    EpsilonEvidence ev = epsilon_search(c, T, plan.max_terms, plan.prec);
    Row row;
    row.add("type", std::string("epsilon"))
        .add("family", c.name())
        .add("k", ev.k)
        .add("eps", ev.epsilon)
        .add("tsum_bound", ev.t_sum.bound);
    stamp(row, plan, "");
    rs.emit(row);
    eps = ev.epsilon;
  }
  SplitResult result = split_sequences(a, c, plan.r, eps, plan.N, plan.prec);
  for (std::size_t n = 0; n < result.b_terms.size(); ++n) {
    Row row;
    row.add("type", std::string("bterm"))
        .add("index", n)
        .add("b", result.b_terms[n])
        .add("residual", result.residuals[n]);
    stamp(row, plan, "");
    rs.emit(row);
  }
  Row row;
  row.add("type", std::string("split"))
      .add("a", a.name())
      .add("c", c.name())
      .add("r", plan.r)
      .add("eps", eps)
      .add("q", result.q)
      .add("a0", result.a0)
      .add("N", result.identity_checked_to)
      .add("residual", result.residual)
      .add("beta_nonneg", result.beta_nonnegative);
  if (result.beta_enclosure) {
    row.add("beta_lo", result.beta_enclosure->lo_rational())
        .add("beta_hi", result.beta_enclosure->hi_rational());
  }
  stamp(row, plan, "");
  rs.emit(row);
  return 0;
}

void emit_profile_rows(const ExperimentPlan& plan, RecordStream& rs,
                       const PrefixMachine& machine, const BitSource& src,
                       const ComplexityProfile& profile) {
  for (std::size_t n = 1; n <= plan.N; ++n) {
    Row row;
    row.add("type", std::string("profile")).add("n", n);
    auto it = profile.entries.find(n);
    if (it == profile.entries.end()) {
      row.add("bits", std::string("unknown"))
          .add("H", std::string("unknown"));
    } else {
      auto bits = src.bits(n);
      row.add("bits", bits ? shown_bits(*bits) : std::string("unknown"))
          .add("H", shown_or(it->second));
    }
    row.add("source", src.description()).add("Lmax", profile.search_limit);
    stamp(row, plan, machine.id());
    rs.emit(row);
  }
}

int run_profile(const ExperimentPlan& plan, RecordStream& rs) {
  PrefixMachine machine = load_machine_spec(plan.machine_path);
  BitSource src = BitSource::exact(Rational::from_string(plan.source));
  ComplexityProfile profile =
      complexity_profile(machine, src, plan.N, plan.lmax, plan.workers);
  emit_profile_rows(plan, rs, machine, src, profile);

  WeakChaitinReport wc = weak_chaitin_T_check(profile, plan.T, Rational(0));
  Row wc_row;
  wc_row.add("type", std::string("weak_chaitin"))
      .add("c", Rational(0))
      .add("witness", wc.witness ? wc.witness->str() : "unknown")
      .add("all_known_hold", wc.all_known_hold);
  if (wc.first_fail) wc_row.add("first_fail", *wc.first_fail);
  stamp(wc_row, plan, machine.id());
  rs.emit(wc_row);

  CompressibilityReport comp =
      t_compressibility_trend(profile, plan.T, plan.window, plan.slack);
  Row comp_row;
  comp_row.add("type", std::string("compressibility"))
      .add("window", comp.window)
      .add("slack", comp.slack)
      .add("window_max", comp.window_max ? comp.window_max->str() : "unknown")
      .add("consistent",
           comp.consistent ? std::string(*comp.consistent ? "true" : "false")
                           : std::string("unknown"));
  stamp(comp_row, plan, machine.id());
  rs.emit(comp_row);

  for (const auto& [n, diff] : chaitin_T_trend(profile, plan.T)) {
    Row row;
    row.add("type", std::string("chaitin_trend")).add("n", n).add("diff", diff);
    stamp(row, plan, machine.id());
    rs.emit(row);
  }
  return 0;
}

int run_mltest(const ExperimentPlan& plan, RecordStream& rs) {
  MLTTest test = load_ml_test_file(plan.test_path, plan.T);
  auto rows = ml_t_test_validate(test, plan.prec);
  for (const auto& r : rows) {
    Row row;
    row.add("type", std::string("mlvalidate"))
        .add("level", r.level)
        .add("verdict", std::string(to_string(r.verdict)))
        .add("sum_lo", r.sum_lo)
        .add("sum_hi", r.sum_hi)
        .add("exact", r.exact);
    stamp(row, plan, "");
    rs.emit(row);
  }
  if (plan.kmax > 0 && !plan.source.empty()) {
    bool failing = false;
    for (const auto& r : rows) failing = failing || r.verdict == TriVerdict::Fails;
    if (failing) {
      Row row;
      row.add("type", std::string("mlmember_refused"))
          .add("reason",
               std::string("a level fails the measure condition; membership "
                           "is only defined for valid tests"));
      stamp(row, plan, "");
      rs.emit(row);
      return 0;
    }
    BitSource src = BitSource::exact(Rational::from_string(plan.source));
    auto member_rows = ml_t_test_member(test, src, test.level_numbers(),
                                        plan.kmax, plan.prec);
    for (const auto& r : member_rows) {
      std::string hits;
      for (std::size_t k : r.hits) {
        if (!hits.empty()) hits += ',';
        hits += std::to_string(k);
      }
      Row row;
      row.add("type", std::string("mlmember"))
          .add("level", r.level)
          .add("source", src.description())
          .add("kmax", plan.kmax)
          .add("hits", hits.empty() ? "-" : hits)
          .add("unknown_bits", r.unknown_bits)
          .add("note", std::string("finite-evidence-only"));
      stamp(row, plan, "");
      rs.emit(row);
    }
  }
  return 0;
}

int run_dim(const ExperimentPlan& plan, RecordStream& rs) {
  PrefixMachine machine = load_machine_spec(plan.machine_path);
  BitSource src = BitSource::exact(Rational::from_string(plan.source));
  ComplexityProfile profile =
      complexity_profile(machine, src, plan.N, plan.lmax, plan.workers);
  emit_profile_rows(plan, rs, machine, src, profile);
  std::size_t window = std::min(plan.window, profile.entries.size());
  std::optional<Rational> estimate;
  if (window >= 1 && !profile.entries.empty()) {
    estimate = dimension_estimate(profile, window);
  }
  Row row;
  row.add("type", std::string("dim"))
      .add("window", window)
      .add("nmax", plan.N)
      .add("estimate", estimate ? estimate->str() : "unknown");
  stamp(row, plan, machine.id());
  rs.emit(row);
  return 0;
}

}  // namespace

IncreasingSequence make_family(const std::string& spec, std::uint64_t budget,
                               int prec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw ParseError("family spec '" + spec +
                     "': expected geom:L,rho | powerlaw:s | omega:path,T");
  }
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "geom") {
    auto [l_text, rho_text] = split_once(rest, ',', false);
    return geometric_sequence(Rational::from_string(l_text),
                              Rational::from_string(rho_text));
  }
  if (kind == "powerlaw") {
    long s = 0;
    try {
      std::size_t used = 0;
      s = std::stol(rest, &used);
      if (used != rest.size()) throw std::exception();
    } catch (...) {
      throw ParseError("family spec '" + spec +
                       "': power-law exponent must be a positive integer");
    }
    return powerlaw_sequence(s);
  }
  if (kind == "omega") {
    auto [path, t_text] = split_once(rest, ',', true);
    PrefixMachine machine = load_machine_spec(path);
    return omega_sequence(machine, Rational::from_string(t_text), budget,
                          prec);
  }
  throw ParseError("family spec '" + spec + "': unknown family '" + kind +
                   "'");
}

int run(const ExperimentPlan& plan, std::ostream& out, std::ostream& err) {
  try {
    if (plan.format != "records" && plan.format != "csv") {
      throw Error("unknown format '" + plan.format + "'");
    }
    // Buffered so a failing command emits its diagnostic, not a half
    // report, and so byte-identity across runs is easy to audit.
    std::ostringstream buffer;
    RecordStream rs(buffer, plan.format == "csv");
    int status;
    if (plan.command == "machine") {
      status = run_machine(plan, rs);
    } else if (plan.command == "omega") {
      status = run_omega(plan, rs);
    } else if (plan.command == "tsum") {
      status = run_tsum(plan, rs);
    } else if (plan.command == "dominate") {
      status = run_dominate(plan, rs);
    } else if (plan.command == "split") {
      status = run_split(plan, rs);
    } else if (plan.command == "profile") {
      status = run_profile(plan, rs);
    } else if (plan.command == "mltest") {
      status = run_mltest(plan, rs);
    } else if (plan.command == "dim") {
      status = run_dim(plan, rs);
    } else {
      throw Error("unknown command '" + plan.command + "'");
    }
    out << buffer.str();
    return status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace relab::cli
