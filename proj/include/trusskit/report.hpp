#pragma once

// Findings collected by a command, rendered as a plain table or as JSON.

#include <chrono>
#include <ostream>
#include <string>
#include <vector>

#include "trusskit/io.hpp"

namespace trusskit {

struct Finding {
  std::string name;
  Json value;
  bool passed = true;
  // Verified over the whole stated domain.
  bool exhaustive = true;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  std::vector<Finding> findings;
  Json witnesses = Json::object();
  std::vector<std::string> notes;

  void add(std::string name, Json value, bool passed = true, bool exhaustive = true);
  bool passed() const;

  // No timing, so the output is byte-stable for fixed inputs.
  Json to_json() const;
  void print_table(std::ostream& out, std::chrono::duration<double> elapsed) const;
};

}  // namespace trusskit
