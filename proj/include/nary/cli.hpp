#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nary/weight_lattice.hpp"

namespace nary::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kInvalidArguments = 2,
  kResourceLimit = 3,
  kOracleDisagreement = 4,
};

/// Parses "c1,c2,...,c_{n-1}". Errors name the offending entry.
Weight parse_weight(const std::string& text, int n, const std::string& name);

/// Runs one command line. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nary::cli
