// Copyright 2026 The kopt Authors.
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

#ifndef KOPT_CLI_H_
#define KOPT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace kopt {

inline constexpr int kExitImproving = 0;
inline constexpr int kExitNoImprovement = 1;
inline constexpr int kExitError = 2;

// Runs the `kopt` command line. `args` excludes the program name. JSON goes
// to `out` (or the --out file), diagnostics and summaries to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace kopt

#endif  // KOPT_CLI_H_
