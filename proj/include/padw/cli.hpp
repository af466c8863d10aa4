#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padw::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 2,
  kParseError = 3,
  kInternalError = 4,
};

/// Runs `padw <subcommand> ...`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace padw::cli
