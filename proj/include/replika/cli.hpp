// Copyright 2026 The Replika Authors
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

#ifndef REPLIKA_CLI_H_
#define REPLIKA_CLI_H_

#include <iosfwd>
#include <string>

#include "replika/config.hpp"

namespace replika {

// Exit codes shared by the subcommands so CI can consume fixture runs:
//   0  success (interpret: at least one candidate; roundtrip: reproduced)
//   1  interpret: no candidate / roundtrip: pruned response did not
//      re-interpret to the full plan as the strict top candidate
//   2  load or validation failure
//   3  generate: no answer type applies (fall back to "I don't know")

// Resolves a scenario path, consulting $REPLIKA_FIXTURES when the path
// does not exist as given.
std::string ResolveScenarioPath(const std::string& path);

int CmdInterpret(const std::string& scenario_path, const RunConfig& cfg,
                 std::ostream& out);
int CmdGenerate(const std::string& scenario_path, const RunConfig& cfg,
                std::ostream& out);
int CmdRoundtrip(const std::string& scenario_path, const RunConfig& cfg,
                 std::ostream& out);
int CmdValidate(const std::string& scenario_path, std::ostream& out);

}  // namespace replika

#endif  // REPLIKA_CLI_H_
