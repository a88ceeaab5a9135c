#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sidon::cli {

// Parses and runs one command. Writes exactly one JSON outcome document to
// out (the sole exception: --help prints plain text); timings and warnings go
// to err. Returns the process exit code:
//   0 success, 1 property violated, 2 invalid input, 3 resource limit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sidon::cli
