#pragma once

#include <cstdint>
#include <iosfwd>

namespace pendant_tc::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsage = 2,
    kBudget = 3,
};

/// Node budget used when --budget is absent: PENDANT_TC_BUDGET if set,
/// otherwise a built-in default. Throws std::invalid_argument when the
/// variable is not a nonnegative integer.
std::uint64_t default_budget();

/// Entry point shared by the executable and the tests.
int run(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace pendant_tc::cli
