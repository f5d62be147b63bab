#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spindec {

// Runs one CLI invocation. Exit code 0 on success, 1 on a domain error,
// 2 on a usage error.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace spindec
