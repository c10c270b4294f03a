#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmambig {

// Runs the command-line interface against the given arguments (without the
// program name). Exit status: 0 success, 1 input error, 2 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmambig
