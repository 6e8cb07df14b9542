#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>

namespace taurus {

// Wire-format headroom: an 8-byte presence mask covers 64 log streams.
inline constexpr uint32_t kMaxLogStreams = 64;

inline constexpr uint64_t kInfiniteLsn = UINT64_MAX;

// Programming-error fault: misconfiguration or a broken invariant, not a
// recoverable condition. Active in all build types.
#define TAURUS_CHECK(cond, msg)                                              \
  do {                                                                       \
    if (!(cond)) {                                                           \
      std::fprintf(stderr, "fatal: %s (%s:%d)\n", msg, __FILE__, __LINE__);  \
      std::abort();                                                          \
    }                                                                        \
  } while (0)

}  // namespace taurus
