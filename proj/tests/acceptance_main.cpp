// Acceptance gate: every property suite at its full instance count and
// stated tolerance, one pass/fail line per criterion.

#include <cstdlib>
#include <iostream>

#include "blc/selftest.hpp"

int main(int argc, char** argv) {
  blc::selftest::Config cfg;
  if (const char* seed = std::getenv("BLC_SEED")) cfg.seed = std::strtoull(seed, nullptr, 0);
  if (argc > 1) cfg.count = std::atoi(argv[1]);

  auto results = blc::selftest::run(cfg);
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.ok;
    std::cout << "criterion " << blc::selftest::format_line(r) << "\n";
  }
  std::cout << (ok ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (seed 0x" << std::hex
            << cfg.seed << std::dec << ", fuel " << cfg.fuel << ")\n";
  return ok ? 0 : 1;
}
