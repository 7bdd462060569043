#pragma once

#include <ostream>

namespace rrgd {

/// Entry point of the `rrgd` command line tool (layout, bench, analyze).
/// Returns the process exit code; diagnostics go to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rrgd
