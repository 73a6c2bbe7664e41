#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rsel::cli {

/// Process exit codes. Each malformed-input class has its own code.
enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,
    kUsageError = 2,
    kRangeError = 3,
    kParseError = 4,
    kVerifyMismatch = 5,
    kBadMagic = 6,
    kUnsupportedVersion = 7,
    kTruncated = 8,
    kFormatError = 9,
    kIoError = 10,
};

/// Runs the tool with `args` (argv without the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsel::cli
