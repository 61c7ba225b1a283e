#pragma once

#include <cstdint>

namespace wreath {

/// Size caps for exhaustive work. Exceeding a cap raises CapExceeded;
/// there is never silent truncation.
struct OracleCaps {
  /// Largest full group that enumerate() will materialize.
  uint64_t enumeration = uint64_t{1} << 20;
  /// Largest set admitted to commutator scans, width search, center
  /// and centralizer computations.
  uint64_t quadratic = uint64_t{1} << 10;
};

}  // namespace wreath
