#ifndef PLCURVE_CLI_HPP
#define PLCURVE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace plcurve {

// Dispatches one CLI invocation. Returns the process exit code:
// 0 success, 1 parse error, 2 domain error, 3 internal error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plcurve

#endif
