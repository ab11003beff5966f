#pragma once

#include <string>
#include <vector>

namespace pivotlab {

/// Runs one CLI invocation (argv without the program name). Returns 0 on
/// success, 1 on domain errors, 2 on usage errors. All output goes to the
/// given streams so tests can drive the surface directly.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pivotlab
