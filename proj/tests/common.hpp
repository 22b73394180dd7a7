#pragma once

#include <cstdint>
#include <vector>

#include "theodorus/claims.hpp"
#include "theodorus/discovery.hpp"
#include "theodorus/spiral.hpp"

namespace testing_support {

/// One table per test binary, large enough for discovery at n_max = 20000.
inline const theodorus::Spiral& spiral() {
  static const theodorus::Spiral s(60000);
  return s;
}

inline const theodorus::Discovery& discovery(std::int64_t d) {
  static std::vector<theodorus::Discovery> cache;
  for (const auto& x : cache) {
    if (x.divisor == d) return x;
  }
  cache.push_back(theodorus::discover(spiral(), d));
  return cache.back();
}

}  // namespace testing_support
