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

#include "replika/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "replika/scenario.hpp"

namespace replika {
namespace {

using nlohmann::json;

bool FileExists(const std::string& path) {
  std::ifstream f(path);
  return f.good();
}

// Loads and validates; on failure prints and returns false.
bool LoadChecked(const std::string& path, std::ostream& out, Scenario* s) {
  try {
    *s = LoadScenario(ResolveScenarioPath(path));
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return false;
  }
  ValidationReport report = ValidateScenario(*s);
  for (const std::string& w : report.warnings)
    out << "warning: " << w << "\n";
  if (!report.ok()) {
    for (const std::string& e : report.errors) out << "error: " << e << "\n";
    return false;
  }
  return true;
}

void PrintTraceLines(const Trace& trace, std::ostream& out) {
  for (const std::string& line : trace.lines) out << "trace: " << line << "\n";
}

json CandidateToJson(const CandidatePlan& c, bool tied) {
  json j;
  j["answer"] = c.op_name;
  j["hypothesized"] = c.hypothesized;
  j["accounted"] = c.accounted;
  j["direct_answer"] = PrintTerm(c.direct_answer);
  j["tied"] = tied;
  j["tree"] = SerializePlan(c.tree);
  return j;
}

void PrintCandidates(const std::vector<CandidatePlan>& cands,
                     const RunConfig& cfg, std::ostream& out) {
  bool tied = TiedAtTop(cands);
  if (cfg.json) {
    json j;
    j["candidates"] = json::array();
    for (size_t i = 0; i < cands.size(); ++i)
      j["candidates"].push_back(CandidateToJson(cands[i], i == 0 && tied));
    out << j.dump(2) << "\n";
    return;
  }
  if (cands.empty()) {
    out << "no candidate answer plan\n";
    return;
  }
  for (size_t i = 0; i < cands.size(); ++i) {
    const CandidatePlan& c = cands[i];
    out << "candidate " << (i + 1) << ": " << c.op_name
        << "  hypothesized=" << c.hypothesized
        << " accounted=" << c.accounted;
    if (i == 0 && tied) out << "  [tied]";
    out << "\n" << FormatPlan(c.tree, 2);
  }
}

}  // namespace

std::string ResolveScenarioPath(const std::string& path) {
  if (FileExists(path)) return path;
  if (const char* dir = std::getenv("REPLIKA_FIXTURES")) {
    std::string alt = std::string(dir) + "/" + path;
    if (FileExists(alt)) return alt;
  }
  return path;
}

int CmdInterpret(const std::string& scenario_path, const RunConfig& cfg,
                 std::ostream& out) {
  Scenario s;
  if (!LoadChecked(scenario_path, out, &s)) return 2;
  if (s.turn.empty() && !cfg.allow_empty) {
    out << "error: scenario has no :turn section\n";
    return 2;
  }
  Trace trace;
  trace.enabled = cfg.trace;
  Engine engine = s.MakeEngine(cfg, &trace);
  std::vector<CandidatePlan> cands =
      InterpretAnswer(s.expectation, s.turn, s.q_base, engine);
  if (cfg.trace) PrintTraceLines(trace, out);
  PrintCandidates(cands, cfg, out);
  return cands.empty() ? 1 : 0;
}

int CmdGenerate(const std::string& scenario_path, const RunConfig& cfg,
                std::ostream& out) {
  Scenario s;
  if (!LoadChecked(scenario_path, out, &s)) return 2;
  Trace trace;
  trace.enabled = cfg.trace;
  Engine engine = s.MakeEngine(cfg, &trace);
  std::optional<GenerationResult> result = GenerateAnswer(
      s.expectation, s.r_base, s.SimulatedQuestionerBase(), engine);
  if (cfg.trace) PrintTraceLines(trace, out);
  if (!result) {
    out << "no answer type applies; deferring to an i-don't-know response\n";
    return 3;
  }
  if (cfg.json) {
    json j;
    j["answer"] = result->op_name;
    j["full_plan"] = SerializePlan(result->full);
    j["pruned_plan"] = SerializePlan(result->pruned);
    j["utterances"] = json::array();
    for (const Term& u : result->utterances)
      j["utterances"].push_back(PrintTerm(u));
    j["adopted_goals"] = json::array();
    for (const Term& g : result->adopted_goals)
      j["adopted_goals"].push_back(PrintTerm(g));
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "answer type: " << result->op_name << "\n";
  out << "full plan:\n" << FormatPlan(result->full, 2);
  out << "pruned plan:\n" << FormatPlan(result->pruned, 2);
  out << "utterances:\n";
  for (const Term& u : result->utterances)
    out << "  " << PrintTerm(u) << "\n";
  return 0;
}

int CmdRoundtrip(const std::string& scenario_path, const RunConfig& cfg,
                 std::ostream& out) {
  Scenario s;
  if (!LoadChecked(scenario_path, out, &s)) return 2;
  Trace trace;
  trace.enabled = cfg.trace;
  Engine engine = s.MakeEngine(cfg, &trace);
  std::optional<GenerationResult> result = GenerateAnswer(
      s.expectation, s.r_base, s.SimulatedQuestionerBase(), engine);
  if (!result) {
    out << "no answer type applies\n";
    return 3;
  }
  std::vector<Utterance> turn;
  for (const Term& u : result->utterances)
    turn.push_back(Utterance{static_cast<int>(turn.size()), u});
  std::vector<CandidatePlan> cands =
      InterpretAnswer(s.expectation, turn, s.q_base, engine);
  if (cfg.trace) PrintTraceLines(trace, out);
  bool ok = !cands.empty() && StrictTop(cands) &&
            EqualModuloTags(cands.front().tree, result->full);
  if (cfg.json) {
    json j;
    j["reproduced"] = ok;
    j["generated"] = SerializePlan(result->full);
    if (!cands.empty()) j["top_candidate"] = SerializePlan(cands.front().tree);
    out << j.dump(2) << "\n";
  } else if (ok) {
    out << "roundtrip ok: the pruned response re-interprets to the full "
           "plan\n";
  } else {
    out << "roundtrip mismatch\n";
    out << "generated full plan:\n" << FormatPlan(result->full, 2);
    if (cands.empty()) {
      out << "interpretation found no candidates\n";
    } else {
      out << (StrictTop(cands) ? "top candidate differs:\n"
                               : "top candidate is tied:\n")
          << FormatPlan(cands.front().tree, 2);
    }
  }
  return ok ? 0 : 1;
}

int CmdValidate(const std::string& scenario_path, std::ostream& out) {
  Scenario s;
  try {
    s = LoadScenario(ResolveScenarioPath(scenario_path));
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  }
  ValidationReport report = ValidateScenario(s);
  for (const std::string& w : report.warnings)
    out << "warning: " << w << "\n";
  for (const std::string& e : report.errors) out << "error: " << e << "\n";
  if (report.ok()) {
    out << "scenario ok\n";
    return 0;
  }
  return 2;
}

}  // namespace replika
