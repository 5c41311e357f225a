#pragma once

#include <ostream>

namespace ssrr::cli {

enum ExitCode : int { kOk = 0, kConfig = 2, kPhysics = 3, kIo = 4 };

/// Entry point of the `ssrr` tool; all output goes to the given streams or to
/// the files named by --out / --svg / --loci.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ssrr::cli
