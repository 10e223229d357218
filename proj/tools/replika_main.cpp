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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "replika/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "replika: interprets and generates indirect answers to yes-no "
      "questions from scenario files"};
  app.require_subcommand(1);

  std::string scenario;
  replika::RunConfig cfg;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", scenario, "scenario file (.scn)")
        ->required();
    cmd->add_option("--max-hyp-depth", cfg.max_hyp_depth,
                    "hypothesis search depth");
    cmd->add_option("--proof-depth", cfg.proof_depth,
                    "prover resolution depth budget");
    cmd->add_option("--plan-depth", cfg.plan_depth,
                    "satellite recursion bound");
    cmd->add_flag("--json", cfg.json, "machine-readable output");
    cmd->add_flag("--trace", cfg.trace, "print engine trace lines");
    cmd->add_flag("--experimental-ordering", cfg.experimental_ordering,
                  "rank by satellite ordering as well (experimental)");
    cmd->add_flag("--multi-satellite", cfg.multi_satellite,
                  "allow several bindings per satellite slot");
  };

  CLI::App* interpret =
      app.add_subcommand("interpret", "recognize the answer plan of a turn");
  add_common(interpret);
  CLI::App* generate =
      app.add_subcommand("generate", "plan and prune an answer");
  add_common(generate);
  CLI::App* roundtrip = app.add_subcommand(
      "roundtrip", "generate, then re-interpret the pruned answer");
  add_common(roundtrip);
  CLI::App* validate =
      app.add_subcommand("validate", "check a scenario file and report");
  validate->add_option("--scenario", scenario, "scenario file (.scn)")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (interpret->parsed())
      return replika::CmdInterpret(scenario, cfg, std::cout);
    if (generate->parsed())
      return replika::CmdGenerate(scenario, cfg, std::cout);
    if (roundtrip->parsed())
      return replika::CmdRoundtrip(scenario, cfg, std::cout);
    if (validate->parsed()) return replika::CmdValidate(scenario, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
