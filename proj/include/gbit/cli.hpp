// Copyright 2026 The gbit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GBIT_CLI_HPP
#define GBIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gbit {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitVerificationFailure = 1, kExitUsage = 2 };

/// Runs the `gbit` command line. `args` excludes the program name. Normal
/// output goes to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Text-mode number formatting: 12 significant digits, always with a
/// decimal point or exponent ("1.0", "-0.166666666667").
std::string format_number(double v);

} // namespace gbit

#endif
