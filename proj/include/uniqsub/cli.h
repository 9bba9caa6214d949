// Copyright 2026 The uniqsub Authors
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

#ifndef UNIQSUB_CLI_H_
#define UNIQSUB_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace uniqsub {

inline constexpr const char* kVersion = "0.1.0";

// Runs one command line (without the program name). Results go to `out`,
// diagnostics and structured errors to `err`. Returns 0 on success, 2 on
// usage or input errors and 1 on internal failures.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uniqsub

#endif  // UNIQSUB_CLI_H_
