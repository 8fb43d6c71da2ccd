#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qslab::cli {

/* Runs one CLI invocation. `args` excludes the program name. Exit status:
 * 0 when everything executed passed, 1 when a verification FAILed, 2 for
 * usage, parse, or evaluation errors. */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace qslab::cli
