#pragma once

#include <cstdint>

namespace steinberg {

// Parameters for the randomized finite-field probes.
struct OracleConfig {
  std::uint64_t prime = 2147483647;
  int trials = 7;
  std::uint64_t seed = 0;
};

}  // namespace steinberg
