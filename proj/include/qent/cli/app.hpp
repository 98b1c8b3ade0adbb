// Copyright 2026 The qent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef QENT_CLI_APP_HPP
#define QENT_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qent::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseFailure = 2,
  kSemanticFailure = 3,
  kDimensionGuard = 4,
  kNotConverged = 5,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`; the return value is the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qent::cli

#endif  // QENT_CLI_APP_HPP
