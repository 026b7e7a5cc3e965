#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // IO, parse and computation failures
inline constexpr int kExitUsage = 2;    // bad flags or descriptors

/// Runs one `cccurve` invocation. args excludes the program name. Reports go
/// to `out`; errors go to `err` as a single "cccurve: <kind>: <message>" line.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccc::cli
