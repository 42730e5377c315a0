// Copyright 2026 The rsplfr Authors.
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

#ifndef RSPLFR_CLI_H_
#define RSPLFR_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace rsplfr {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdict = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the rsplfr tool. `args` excludes the program name.
// Returns 0 on success, 1 when a check comes out other than the variant
// promises (or a decode fails), 2 on usage and input errors.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsplfr

#endif  // RSPLFR_CLI_H_
