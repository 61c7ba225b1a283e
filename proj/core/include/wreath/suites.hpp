#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreath/caps.hpp"
#include "wreath/signature.hpp"

#include "json.hpp"

namespace wreath {

struct SuiteCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  WreathSignature signature;
  std::vector<SuiteCheck> checks;
  int64_t elapsed_ms = 0;

  bool all_pass() const;
  nlohmann::json to_json() const;
};

struct SuiteOptions {
  uint64_t seed = 1;
  uint64_t samples = 1000;
  /// Binary-only suites that sample may extend to deeper uniform binary
  /// signatures, up to this depth. 0 keeps just the given signature.
  uint32_t max_depth = 0;
  OracleCaps caps;
};

/// Named verification suites runnable against one signature:
/// orders, membership, cw, squares, center, decompose, homomorphism.
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, const WreathSignature& sig,
                      const SuiteOptions& opts = {});

}  // namespace wreath
