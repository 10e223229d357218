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

#ifndef REPLIKA_SCENARIO_H_
#define REPLIKA_SCENARIO_H_

#include <optional>
#include <string>
#include <vector>

#include "replika/generate.hpp"
#include "replika/interpret.hpp"

namespace replika {

// Optional expectations a fixture states about itself, consumed by the
// test harness and ignored by the engine.
struct ExpectedArtifacts {
  std::optional<std::string> top_op;              // (top-answer <name>)
  std::optional<std::pair<int, int>> top_counts;  // (top-counts <hyp> <acc>)
  std::optional<std::vector<Term>> utterances;    // (utterances <term>*)
  bool no_candidates = false;                     // (no-candidates)
};

// A packaged session: the two agents' belief spaces, the pragmatic rules
// and operators (builtin plus any file-local additions), the discourse
// expectation, and, for interpretation scenarios, the responder's turn.
//
// The same file serves both directions: interpretation reads the
// questioner's base as the questioner's actual beliefs; generation reads
// the responder's base, and the responder's model of the questioner is
// assembled from the shared spaces plus the responder's about-other space.
struct Scenario {
  std::string q_agent;  // questioner (hearer of the answer)
  std::string r_agent;  // responder (speaker of the answer)
  BeliefBase q_base;
  BeliefBase r_base;
  RuleLibrary rules;
  OperatorLibrary operators;
  DiscourseExpectation expectation;
  std::vector<Utterance> turn;
  ExpectedArtifacts expect;

  // The responder's model of the questioner, used to simulate the
  // questioner's interpretation during pruning.
  BeliefBase SimulatedQuestionerBase() const;

  Engine MakeEngine(const RunConfig& cfg, Trace* trace = nullptr) const;
};

// Facts every scenario starts from: the three time periods.
std::vector<Clause> PreludeClauses();

// Loads and validates a scenario file. Throws ParseError (with location)
// or std::runtime_error on structural problems.
Scenario LoadScenario(const std::string& path);
Scenario LoadScenarioText(const std::string& text,
                          const std::string& base_dir = ".");

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool ok() const { return errors.empty(); }
};

// Report-only checks: ground expectation and turn, non-generative
// coherence rules, unless cycles reachable through the rule set, operator
// invariants, missing spaces.
ValidationReport ValidateScenario(const Scenario& s);

}  // namespace replika

#endif  // REPLIKA_SCENARIO_H_
