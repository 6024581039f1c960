#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdl {

/// Runs one command. Exit codes: 0 all checks pass, 1 a mathematical check
/// fails, 2 input or size error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace sdl
