#pragma once

// Property suites are bit-reproducible: every randomized test derives its
// stream from a fixed per-suite constant, shifted by DNCG_TEST_SEED when
// that environment variable is set.

#include <cstdint>
#include <cstdlib>
#include <string>

namespace test_support {

inline std::uint64_t seed(std::uint64_t suite_constant) {
  if (const char* env = std::getenv("DNCG_TEST_SEED"))
    return suite_constant ^ std::stoull(std::string(env));
  return suite_constant;
}

}  // namespace test_support
