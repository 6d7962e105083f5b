/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#include "relab/machine_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "relab/errors.hpp"

namespace relab {

namespace {

Bits parse_bits_token(const std::string& token, const std::string& where) {
  if (token == "-") return Bits{};
  if (!is_valid_bits(token) || token.empty()) {
    throw ParseError(where + ": '" + token + "' is not a bitstring");
  }
  return token;
}

}  // namespace

PrefixMachine parse_machine_spec(std::istream& in,
                                 const std::string& source_name) {
  std::string id;
  std::vector<MachineEntry> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string where =
        source_name + ":" + std::to_string(lineno) + " '" + line + "'";
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;  // blank
    if (first == "machine") {
      if (!(fields >> id) || id.empty()) {
        throw ParseError(where + ": missing machine id");
      }
      continue;
    }
    if (id.empty()) {
      throw ParseError(where + ": expected 'machine <id>' before entries");
    }
    std::string output_token;
    if (!(fields >> output_token)) {
      throw ParseError(where + ": entry needs '<program> <output> [steps]'");
    }
    MachineEntry e;
    e.program = parse_bits_token(first, where);
    e.output = parse_bits_token(output_token, where);
    std::string steps_token;
    if (fields >> steps_token) {
      try {
        std::size_t used = 0;
        unsigned long long steps = std::stoull(steps_token, &used);
        if (used != steps_token.size() || steps == 0) throw std::exception();
        e.steps = steps;
      } catch (...) {
        throw ParseError(where + ": steps must be a positive integer");
      }
    }
    std::string extra;
    if (fields >> extra) {
      throw ParseError(where + ": trailing text '" + extra + "'");
    }
    entries.push_back(std::move(e));
  }
  if (id.empty()) {
    throw ParseError(source_name + ": no 'machine <id>' line found");
  }
  return PrefixMachine::with_schedule(id, std::move(entries));
}

PrefixMachine load_machine_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open machine spec '" + path + "'");
  return parse_machine_spec(in, path);
}

std::string machine_spec_text(const PrefixMachine& machine) {
  std::ostringstream out;
  out << "machine " << machine.id() << "\n";
  for (const auto& e : machine.entries()) {
    out << (e.program.empty() ? "-" : e.program) << " "
        << (e.output.empty() ? "-" : e.output);
    if (e.steps != 1) out << " " << e.steps;
    out << "\n";
  }
  return out.str();
}

}  // namespace relab
