// Command-line front end. run_cli parses argv-style arguments, executes one
// verb, and reports through the given streams; exit status 0 on success, 1 on
// domain errors, 2 on budget exhaustion (partial results still printed).

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fintopo {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fintopo
