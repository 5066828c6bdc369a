#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invk::cli {

// Exit codes: 0 all pass, 1 violations found, 2 input error, 3 truncation
// exceeded.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace invk::cli
