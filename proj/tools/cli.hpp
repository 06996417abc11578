#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surfcol::cli {

// Entry point shared by the binary and the CLI tests. Returns the process
// exit code: 0 success, 1 negative answer (UNSAT / INVALID / no cycle),
// 2 usage or input error.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surfcol::cli
