#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgint::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitAssertion = 3;

inline constexpr unsigned kMaxRank = 6;

/// Runs one command line (without the program name). Returns the process
/// exit status: 0 success, 2 parse/validation error, 3 internal assertion
/// (integrality, route mismatch, failed verification).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgint::cli
