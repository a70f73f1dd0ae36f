#pragma once

#include <iosfwd>

namespace loopalg::cli {

// Runs the command line given in argv. Returns the process exit code:
// 0 on success, 1 when a verification suite fails, 2 on usage or input
// errors. All regular output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace loopalg::cli
