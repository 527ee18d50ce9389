#pragma once

#include <iosfwd>

namespace tfloc::cli {

/// Exit codes: 0 success, 1 usage or input error, 2 a mathematical check failed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace tfloc::cli
