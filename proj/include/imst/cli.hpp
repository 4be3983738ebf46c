#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace imst::cli {

// Runs one command (args exclude the program name) against the given
// streams. Exit codes: 0 success / all checks passed, 1 infeasible
// instance, 2 usage or parse error, 3 verification found a violation.
// Errors are written to err as one line: "error:<kind>: <message>".
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace imst::cli
