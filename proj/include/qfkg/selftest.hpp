#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qfkg {

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Quick run of the library invariants, one result per check.
std::vector<SelftestResult> run_selftest(std::uint64_t seed, std::size_t jobs = 1);

}  // namespace qfkg
