#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace blc::selftest {

struct SuiteResult {
  int id = 0;
  std::string name;
  int total = 0;
  int pass = 0;
  int equal = 0, unknown = 0, distinct = 0;  // verdict counters where applicable
  bool ok = false;
  std::string note;
};

struct Config {
  std::uint64_t seed = 0xB1CA;
  int count = 0;  // 0 keeps each suite's own instance count
  int fuel = 10000;
};

std::vector<SuiteResult> run(const Config& cfg);
std::string format_line(const SuiteResult& r);

}  // namespace blc::selftest
