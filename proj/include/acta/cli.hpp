#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace acta {

  // Exit codes of the acta tool.
  enum ExitCode : int {
    exit_ok          = 0,
    exit_io          = 1,
    exit_validation  = 2,  // also syntax and usage errors
    exit_cap         = 3,
    exit_consistency = 4,
  };

  // Runs one command; args exclude the program name.
  int run_cli(std::vector<std::string> const& args, std::ostream& out,
              std::ostream& err);

}  // namespace acta
