#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mero {

struct SelftestCheck {
  std::string module;
  std::string name;
  bool passed;
  std::string detail;
};

/// Reduced-size invariant suites of every module, seeded.
std::vector<SelftestCheck> run_selftest(std::uint64_t seed);

}  // namespace mero
