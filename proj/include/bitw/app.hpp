#pragma once

#include <string>
#include <vector>

namespace bitw {

// CLI entry point shared by the binary and the test suites.
// Exit codes: 0 success, 2 usage error, 3 data error.
int run_cli(const std::vector<std::string>& args);

}  // namespace bitw
