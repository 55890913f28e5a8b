// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace irssim {

/// Executes one CLI invocation (without the program name).  Returns 0 on
/// success, 1 on validation or usage errors, 2 when verification fails.
int run_cli(const std::vector<std::string>& args);

} // namespace irssim
