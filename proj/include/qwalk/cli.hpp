#pragma once

namespace qwalk {

// Full command-line front end: walk, game, sweep, figure, verify.
// Returns the process exit status.
int run_cli(int argc, const char* const* argv);

}  // namespace qwalk
