// Copyright 2026 The News Placer Authors.
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

#ifndef NEWS_PLACER_TOOLS_CLI_H_
#define NEWS_PLACER_TOOLS_CLI_H_

#include <ostream>

namespace news_placer {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. Results go to `out`, diagnostics to stderr.
int run_cli(int argc, const char* const* argv, std::ostream& out);

}  // namespace news_placer

#endif  // NEWS_PLACER_TOOLS_CLI_H_
