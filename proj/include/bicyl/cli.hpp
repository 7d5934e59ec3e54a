#ifndef BICYL_CLI_HPP
#define BICYL_CLI_HPP

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bicyl/geometry.hpp"

namespace bicyl::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailed = 1,
  kUsageError = 2,
  kNumericalFailure = 3,
};

/// Bad command-line input; maps to kUsageError.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "ax,ay,az,bx,by,bz,r". Errors name the option and the offending field.
Cylinderd parse_cylinder(const std::string& text, const std::string& option);

/// Runs the command line (args excludes the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bicyl::cli

#endif  // BICYL_CLI_HPP
