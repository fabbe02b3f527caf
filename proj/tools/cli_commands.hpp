#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "inconic/error.hpp"

namespace inconic::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidQuad = 2,
  kOffLocus = 3,
  kParallelogram = 4,
  kNumerical = 5,
  kIo = 6,
};

ExitCode exit_code_for(ErrorCode code);

/// Runs the command line `args` (args[0] is the program name).
/// `env_tol` carries INCONIC_TOL when set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_tol = std::nullopt);

}  // namespace inconic::cli
