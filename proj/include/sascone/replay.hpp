#pragma once

#include <string>
#include <vector>

#include "sascone/integer.hpp"
#include "sascone/serialize.hpp"

namespace sascone::replay {

struct Check {
  std::string id;
  // Which published table row the value reproduces, e.g.
  // "four-bouquet table, m=1, positivity range table".
  std::string locator;
  std::string expected;
  std::string got;
  bool passed = false;
};

struct Options {
  // Fano index used for CP^1; overriding it is a fault-injection hook.
  Int cp1_index = 2;
};

// Recomputes the published bouquet, range, c1, spin and torsion tables.
std::vector<Check> replay_tables(const Options& options = {});

bool all_passed(const std::vector<Check>& checks);

Json to_json(const std::vector<Check>& checks);

// "MISMATCH <id> (<locator>): expected <e>, got <g>" for each failure.
std::string diff_text(const std::vector<Check>& checks);

}  // namespace sascone::replay
