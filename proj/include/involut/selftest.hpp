#pragma once

// Randomized property suite over exact arithmetic, shared by the `selftest`
// subcommand and the acceptance checks.

#include <cstdint>
#include <string>
#include <vector>

namespace involut {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;  // description of the first failing case

  bool passed() const { return failures == 0 && cases > 0; }
};

inline constexpr std::size_t kPropertyCases = 100;

std::vector<PropertyResult> run_property_suite(std::uint64_t seed, std::size_t cases = kPropertyCases);

}  // namespace involut
