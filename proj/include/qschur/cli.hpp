#pragma once

#include <string>
#include <vector>

namespace qschur {

/// Command-line entry point. Exit codes: 0 all asserted suites pass,
/// 1 a suite failed, 2 usage or domain error. Report-only outcomes never
/// affect the exit code.
int cli_main(const std::vector<std::string>& args);

} // namespace qschur
