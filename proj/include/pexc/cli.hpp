#pragma once

#include <iosfwd>

namespace pexc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `pexc` tool. Subcommands: dist, table, moments, cf,
/// sample, verify. Writes payloads to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pexc::cli
