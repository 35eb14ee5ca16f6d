#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace signedpat {

// args[0] is the program name. Returns the process exit code:
// 0 success, 1 verification mismatch, 2 usage, parse or runtime error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace signedpat
