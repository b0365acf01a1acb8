#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sphere_chroma::cli {

// sysexits-style codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 2;
inline constexpr int kExitUndecided = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataError = 65;
inline constexpr int kExitIoError = 74;

/// Runs one invocation. `args` excludes the program name. JSON and exported
/// text go to `out`, diagnostics to `err`; `in` backs `--input -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace sphere_chroma::cli
