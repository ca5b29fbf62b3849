// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bargmann::cli {

enum ExitCode : int {
  kSuccess = 0,
  kIoError = 1,
  kUsageError = 2,
  kGridConstraint = 3,
};

/// Runs the command line `args` (without the program name). Regular output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bargmann::cli
