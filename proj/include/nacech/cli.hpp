#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "nacech/cech.hpp"

namespace nacech {

enum ExitCode { kExitOk = 0, kExitNegative = 1, kExitParse = 2, kExitBudget = 3 };

struct RunConfig {
  std::string command;
  std::string kind;  // validate: group | cm | complex | cocycle
  std::string group, complex, cm, cocycle, cocycle2, coboundary;
  Strategy strategy = Strategy::Brute;
  std::uint64_t budget = 100'000'000;
  int workers = 1;
  std::string out;
  int coeff = 2;
  int degree = 2;
};

// Report goes to `report`, one `key: value` per line. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& report);

}  // namespace nacech
