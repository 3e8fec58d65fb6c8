#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankdel {

/// Entry point shared by the binary and the CLI tests. Returns the process
/// exit code: 0 success, 1 axiom violations found, 2 instance parse error,
/// 3 rule/instance incompatibility, 4 configuration error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rankdel
