// Copyright 2026 The dpadmm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPADMM_TOOLS_CLI_HPP_
#define DPADMM_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace dpadmm::cli {

// Entry point behind main(). Exposed so tests can drive the exact command
// path; returns the process exit code. Output goes to `out` (stdout in the
// binary).
int Run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace dpadmm::cli

#endif  // DPADMM_TOOLS_CLI_HPP_
