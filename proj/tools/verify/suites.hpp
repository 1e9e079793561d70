#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dc::verify {

struct Result {
  std::string name;
  bool ok = true;
  long checks = 0;
  long failures = 0;
  double seconds = 0;
  std::vector<std::string> notes;  // first few failure descriptions
};

struct Suite {
  std::string name;
  int criterion;         // acceptance criterion number
  double budget;         // seconds; 0 = none
  std::string summary;
  std::function<void(Result&, std::uint64_t seed)> body;
};

const std::vector<Suite>& suites();
const Suite* find_suite(const std::string& name);

// Runs a suite, timing it and turning an escaped exception into a failure.
Result run_suite(const Suite& s, std::uint64_t seed);

// DC_SEED if set and numeric, else a fixed default.
std::uint64_t seed_from_env();

}  // namespace dc::verify
