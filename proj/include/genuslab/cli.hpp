#pragma once

#include <ostream>
#include <span>
#include <string>

namespace genuslab {

// Runs one genuslab command. `args` excludes the program name. Returns the
// process exit status: 0 all verdicts hold, 1 a checked congruence fails,
// 2 input or validation error.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace genuslab
