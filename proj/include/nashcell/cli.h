// Copyright 2026 The nashcell Authors.
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

#ifndef NASHCELL_CLI_H_
#define NASHCELL_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace nashcell {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotSolved = 2;

// Runs one CLI invocation; `args` excludes the program name. Results and errors
// are written to `out` as JSON; errors have the form
// {"error": {"code": "...", "message": "..."}}.
int RunCli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace nashcell

#endif  // NASHCELL_CLI_H_
