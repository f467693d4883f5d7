#pragma once

#include <iosfwd>

namespace qwalk {

// Runs the ten acceptance checks, printing one PASS/FAIL line each plus a
// summary line. Returns the number of failing checks.
int run_acceptance(std::ostream& out);

}  // namespace qwalk
