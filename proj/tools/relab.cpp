/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "relab/cli.hpp"
#include "relab/errors.hpp"

namespace {

struct RationalFlags {
  std::string T = "1";
  std::string slack = "1/8";
  std::string bound = "0";
  std::string r = "1";
  std::string eps = "0";
};

void add_common(CLI::App* cmd, relab::cli::ExperimentPlan& plan,
                RationalFlags& flags) {
  cmd->add_option("--T", flags.T, "temperature as p/q in (0,1]");
  cmd->add_option("--prec", plan.prec, "working precision in bits");
  cmd->add_option("--budget", plan.budget, "enumeration budget (dovetail rounds)");
  cmd->add_option("--N,--nmax", plan.N, "index/prefix count");
  cmd->add_option("--Lmax", plan.lmax, "brute-force program length cap");
  cmd->add_option("--cmax", plan.c_max, "largest domination constant tried");
  cmd->add_option("--window", plan.window, "trailing window for trend statistics");
  cmd->add_option("--slack", flags.slack, "compressibility slack as p/q");
  cmd->add_option("--bound", flags.bound, "probe bound B as p/q (0 = plain sum)");
  cmd->add_option("--max-terms", plan.max_terms, "probe term budget");
  cmd->add_option("--seed", plan.seed, "seed recorded with the plan");
  cmd->add_option("--workers", plan.workers, "worker threads (never changes output)");
  cmd->add_option("--format", plan.format, "records|csv");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relab: a desk-scale laboratory for r.e. reals, halting "
               "probabilities, and partial randomness"};
  app.require_subcommand(1);

  relab::cli::ExperimentPlan plan;
  RationalFlags flags;

  auto* machine = app.add_subcommand(
      "machine", "validate a machine spec and enumerate its domain");
  machine->add_option("--machine", plan.machine_path, "machine spec file")
      ->required();
  add_common(machine, plan, flags);

  auto* omega = app.add_subcommand(
      "omega", "certified lower bounds of the T-weighted halting sum");
  omega->add_option("--machine", plan.machine_path, "machine spec file")
      ->required();
  add_common(omega, plan, flags);

  auto* tsum = app.add_subcommand(
      "tsum", "partial T-power sums / convergence probe for a sequence");
  tsum->add_option("--a", plan.family_a, "sequence family spec")->required();
  add_common(tsum, plan, flags);

  auto* dominate = app.add_subcommand(
      "dominate", "domination constants between two sequences");
  dominate->add_option("--a", plan.family_a, "dominating sequence")->required();
  dominate->add_option("--b", plan.family_b, "dominated sequence")->required();
  dominate->add_option("--c", plan.c, "check a fixed constant as well");
  add_common(dominate, plan, flags);

  auto* split = app.add_subcommand(
      "split", "decompose a = a_0 + sum b_n + q c with exact telescoping");
  split->add_option("--a", plan.family_a, "target sequence")->required();
  split->add_option("--c", plan.family_c, "carrier sequence (c_0 = 0)")
      ->required();
  split->add_option("--r", flags.r, "rate r as p/q");
  split->add_option("--eps", flags.eps, "epsilon as p/q (0 = search)");
  add_common(split, plan, flags);

  auto* profile = app.add_subcommand(
      "profile", "complexity profile of a source with trend statistics");
  profile->add_option("--machine", plan.machine_path, "machine spec file")
      ->required();
  profile->add_option("--source", plan.source, "rational source as p/q")
      ->required();
  add_common(profile, plan, flags);

  auto* mltest = app.add_subcommand(
      "mltest", "validate a Martin-Loef T-test, optionally check membership");
  mltest->add_option("--test", plan.test_path, "ML test file")->required();
  mltest->add_option("--source", plan.source, "rational source as p/q");
  mltest->add_option("--kmax", plan.kmax, "prefix lengths to check");
  add_common(mltest, plan, flags);

  auto* dim = app.add_subcommand(
      "dim", "trailing-window dimension estimate from a complexity profile");
  dim->add_option("--machine", plan.machine_path, "machine spec file")
      ->required();
  dim->add_option("--source", plan.source, "rational source as p/q")
      ->required();
  add_common(dim, plan, flags);

  CLI11_PARSE(app, argc, argv);

  plan.command = app.get_subcommands().front()->get_name();
  try {
    plan.T = relab::Rational::from_string(flags.T);
    plan.slack = relab::Rational::from_string(flags.slack);
    plan.bound = relab::Rational::from_string(flags.bound);
    plan.r = relab::Rational::from_string(flags.r);
    plan.eps = relab::Rational::from_string(flags.eps);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return relab::cli::run(plan, std::cout, std::cerr);
}
