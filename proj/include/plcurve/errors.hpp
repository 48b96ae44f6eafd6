#ifndef PLCURVE_ERRORS_HPP
#define PLCURVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plcurve {

// Invalid mathematical input (wrong domain, failed precondition).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input (series grammar, curve files, rationals).
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two input branches denote the same branch (coincidence order infinite).
struct duplicate_branch_error : domain_error {
  explicit duplicate_branch_error(const std::string& msg) : domain_error(msg) {}
};

// Coefficients outside the range an operation supports (non-real phases).
struct unsupported_coefficient_error : domain_error {
  explicit unsupported_coefficient_error(const std::string& msg) : domain_error(msg) {}
};

}  // namespace plcurve

#endif
