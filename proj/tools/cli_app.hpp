#pragma once

#include <iosfwd>

namespace gaprecover::cli {

/// Seed used when --seed is not given.
inline constexpr unsigned long long default_seed = 20130517ull;

/// Runs the command line. Exit codes: 0 success, 1 usage or input error,
/// 2 numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gaprecover::cli
