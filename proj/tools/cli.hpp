#pragma once

#include <iosfwd>

namespace rislink::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `rislink` invocation. Tables go to `out` unless --out is given;
/// diagnostics go to `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rislink::cli
