#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wordlab::cli {

enum class Suite { Props, Tower, All };

struct PropertyResult {
  std::string name;
  std::string anchor;  // the formula being checked
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when passed

  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  std::vector<PropertyResult> properties;

  bool passed() const;
};

// Every property draws from its own generator seeded from (seed, property index),
// so results do not depend on which other properties ran.
VerifyReport verify(Suite suite, std::uint64_t seed, std::uint64_t cases);

}  // namespace wordlab::cli
