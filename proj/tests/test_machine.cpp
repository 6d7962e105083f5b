/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#include <doctest.h>

#include <random>
#include <sstream>

#include "generators.hpp"
#include "relab/machine.hpp"
#include "relab/machine_io.hpp"

using namespace relab;

namespace {

PrefixMachine toy3() {
  return PrefixMachine::table("toy3", {{"0", ""}, {"10", "0"}, {"110", "1"}});
}

}  // namespace

TEST_CASE("check_prefix_free") {
  CHECK(!check_prefix_free({"0", "10", "110"}).has_value());
  auto v = check_prefix_free({"0", "00"});
  REQUIRE(v.has_value());
  CHECK(v->prefix == "0");
  CHECK(v->extension == "00");

  auto lambda = check_prefix_free({"", "0"});
  REQUIRE(lambda.has_value());
  CHECK(lambda->prefix == "");
  CHECK(lambda->extension == "0");

  // Lexicographically first violating pair among several.
  auto first = check_prefix_free({"1", "10", "11", "0", "00"});
  REQUIRE(first.has_value());
  CHECK(first->prefix == "0");
  CHECK(first->extension == "00");
}

TEST_CASE("kraft_check") {
  auto k = kraft_check({"0", "10", "110"});
  CHECK(k.sum == Rational(7, 8));
  CHECK(k.ok);

  auto complete = kraft_check({"0", "1"});
  CHECK(complete.sum == Rational(1));
  CHECK(complete.ok);

  CHECK_THROWS_AS(kraft_check({"0", "00"}), Error);

  gen::Rng rng(101);
  for (int i = 0; i < 100; ++i) {
    auto code = gen::prefix_free_code(rng, 1 + static_cast<int>(i % 7));
    auto result = kraft_check(code);
    REQUIRE(result.ok);
  }
}

TEST_CASE("kraft sum is nondecreasing along the enumeration and stays <= 1") {
  gen::Rng rng(102);
  for (int i = 0; i < 20; ++i) {
    auto machine = gen::random_machine(rng, "m" + std::to_string(i));
    Rational running(0);
    for (const auto& ev : enumerate_domain(machine, 1 << 20)) {
      Rational next = running + pow2(-static_cast<long>(ev.program.size()));
      REQUIRE(next > running);
      REQUIRE(next <= Rational(1));
      running = next;
    }
  }
}

TEST_CASE("machine construction enforces its invariants") {
  CHECK_THROWS_AS(PrefixMachine::table("bad", {{"0", ""}, {"00", ""}}), Error);
  CHECK_THROWS_AS(PrefixMachine::table("dup", {{"0", ""}, {"0", "1"}}), Error);
  CHECK_THROWS_AS(PrefixMachine::table("alpha", {{"02", ""}}), Error);
  CHECK_THROWS_AS(
      PrefixMachine::with_schedule("steps", {{"0", "", 0}}), Error);
  auto m = toy3();
  CHECK(m.kraft_sum() == Rational(7, 8));
  CHECK(m.run("10") == Bits("0"));
  CHECK(!m.run("111").has_value());
}

TEST_CASE("build_universal header construction") {
  auto c0 = PrefixMachine::table("c0", {{"0", ""}});
  auto u0 = build_universal("u0", {&c0});
  CHECK(u0.entries().size() == 1);
  CHECK(u0.run("10") == Bits(""));
  CHECK(u0.entries()[0].program.size() == 2);  // |p| + 0 + 1

  auto c1 = PrefixMachine::table("c1", {{"0", "1"}});
  auto u = build_universal("u", {&c0, &c1});
  CHECK(u.run("10") == Bits(""));
  CHECK(u.run("010") == Bits("1"));
  CHECK(u.entries()[1].program.size() == 3);  // |p| + 1 + 1

  auto empty = build_universal("empty", {});
  CHECK(empty.entries().empty());
  CHECK(empty.kraft_sum() == Rational(0));
}

TEST_CASE("enumerate_domain dovetailing") {
  auto m = PrefixMachine::table("t", {{"0", ""}, {"10", "0"}});
  auto events = enumerate_domain(m, 2);
  REQUIRE(events.size() == 2);
  CHECK(events[0].program == "0");
  CHECK(events[0].first_round == 1);
  CHECK(events[1].program == "10");
  CHECK(events[1].first_round == 2);
  CHECK(events[0].discovery_index == 0);

  CHECK(enumerate_domain(m, 0).empty());

  // Declared step counts gate discovery: entry k halts at step (k+1)^2.
  std::vector<MachineEntry> entries;
  for (std::size_t k = 0; k < 16; ++k) {
    Bits p(k, '0');
    p.push_back('1');
    entries.push_back({p, "", (k + 1) * (k + 1)});
  }
  auto sched = PrefixMachine::with_schedule("sched", std::move(entries));
  auto found = enumerate_domain(sched, 100);
  CHECK(found.size() == 10);  // (k+1)^2 <= 100 iff k+1 <= 10
  for (std::size_t i = 0; i < found.size(); ++i) {
    CHECK(found[i].steps == (i + 1) * (i + 1));
  }
}

TEST_CASE("enumeration is deterministic") {
  gen::Rng rng(103);
  auto machine = gen::random_machine(rng, "det", 6);
  auto a = enumerate_domain(machine, 64);
  auto b = enumerate_domain(machine, 64);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].program == b[i].program);
    CHECK(a[i].discovery_index == b[i].discovery_index);
    CHECK(a[i].first_round == b[i].first_round);
  }
}

TEST_CASE("brute_force_H on the toy machine") {
  auto m = toy3();
  CHECK(brute_force_H(m, "", 8) == 1);
  CHECK(brute_force_H(m, "0", 8) == 2);
  CHECK(brute_force_H(m, "1", 8) == 3);
  CHECK(!brute_force_H(m, "00", 8).has_value());

  auto c0 = PrefixMachine::table("c0", {{"0", ""}});
  auto u = build_universal("u", {&c0});
  CHECK(brute_force_H(u, "", 8) == 2);

  CHECK_THROWS_AS(brute_force_H(m, "", 60), UnsupportedError);
}

TEST_CASE("brute_force_H is worker-count independent") {
  gen::Rng rng(104);
  for (int i = 0; i < 10; ++i) {
    auto machine = gen::random_machine(rng, "w" + std::to_string(i), 6);
    for (const auto& e : machine.entries()) {
      auto h1 = brute_force_H(machine, e.output, 10, 1);
      auto h2 = brute_force_H(machine, e.output, 10, 2);
      auto h4 = brute_force_H(machine, e.output, 10, 4);
      REQUIRE(h1 == h2);
      REQUIRE(h1 == h4);
    }
  }
}

TEST_CASE("optimality: the universal pays at most i + 1 over member i") {
  auto c0 = toy3();
  auto c1 = PrefixMachine::table("pairs", {{"0", "1"}, {"10", "00"}, {"11", "01"}});
  auto c2 = PrefixMachine::table("deep", {{"00", "111"}, {"01", ""}});
  std::vector<const PrefixMachine*> family{&c0, &c1, &c2};
  auto u = build_universal("u", family);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (const auto& e : family[i]->entries()) {
      auto h_member = brute_force_H(*family[i], e.output, 12);
      auto h_u = brute_force_H(u, e.output, 12);
      REQUIRE(h_member.has_value());
      REQUIRE(h_u.has_value());
      REQUIRE(*h_u <= *h_member + static_cast<int>(i) + 1);
    }
  }
}

TEST_CASE("machine spec round trip and rejection") {
  std::istringstream good(
      "# toy machine\n"
      "machine toy3\n"
      "0 -\n"
      "10 0\n"
      "110 1 3\n");
  auto m = parse_machine_spec(good, "good");
  CHECK(m.id() == "toy3");
  CHECK(m.entries().size() == 3);
  CHECK(m.entries()[0].output == "");
  CHECK(m.entries()[2].steps == 3);

  auto text = machine_spec_text(m);
  std::istringstream again(text);
  auto m2 = parse_machine_spec(again, "again");
  CHECK(machine_spec_text(m2) == text);

  std::istringstream no_id("0 -\n");
  CHECK_THROWS_AS(parse_machine_spec(no_id, "no_id"), ParseError);

  std::istringstream bad_bits("machine m\n0 2x\n");
  CHECK_THROWS_AS(parse_machine_spec(bad_bits, "bad_bits"), ParseError);

  std::istringstream bad_steps("machine m\n0 - -4\n");
  CHECK_THROWS_AS(parse_machine_spec(bad_steps, "bad_steps"), ParseError);

  // Prefix violations echo the offending pair.
  std::istringstream clash("machine m\n0 -\n00 1\n");
  try {
    parse_machine_spec(clash, "clash");
    FAIL("expected a prefix violation");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("0") != std::string::npos);
    CHECK(std::string(e.what()).find("00") != std::string::npos);
  }
}
