#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace hyperboot::testing {

/// Base seed for randomized corpora; HYPERBOOT_SEED overrides the default 0.
inline std::uint64_t corpus_seed() {
  const char* env = std::getenv("HYPERBOOT_SEED");
  return env && *env ? std::stoull(env) : 0;
}

}  // namespace hyperboot::testing
