#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace etaq {

// Runs one CLI invocation. args excludes the program name. Returns the exit
// status: 0 all PASS/SKIPPED, 1 any FAIL verdict, 2 usage or precision
// errors (the message names the minimum sufficient precision when relevant).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace etaq
