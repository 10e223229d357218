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

#include "replika/scenario.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace replika {

std::vector<Clause> PreludeClauses() {
  return ParseClauses(
      "(timeperiod past) (timeperiod present) (timeperiod future)");
}

BeliefBase Scenario::SimulatedQuestionerBase() const {
  // What the responder takes the questioner to believe: the mutual spaces
  // plus the responder's model of the questioner's private beliefs. The
  // responder has no model of the questioner's model of the responder, so
  // the simulated about-other space stays empty.
  BeliefBase sim(q_agent, r_agent);
  sim.AssertAll(Space::kSharedWorld, r_base.clauses(Space::kSharedWorld));
  sim.AssertAll(Space::kDiscourse, r_base.clauses(Space::kDiscourse));
  sim.AssertAll(Space::kPrivate, r_base.clauses(Space::kAboutOther));
  return sim;
}

Engine Scenario::MakeEngine(const RunConfig& cfg, Trace* trace) const {
  Engine e;
  e.rules = &rules;
  e.ops = &operators;
  e.cfg = cfg;
  e.trace = trace;
  return e;
}

namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string DirName(const std::string& path) {
  size_t slash = path.find_last_of('/');
  return slash == std::string::npos ? "." : path.substr(0, slash);
}

int ParseInt(const SExpr& atom) {
  if (!atom.IsAtom()) throw ParseError("expected an integer", atom.pos);
  return std::stoi(atom.text);
}

}  // namespace

Scenario LoadScenarioText(const std::string& text,
                          const std::string& base_dir) {
  std::vector<SExpr> forms = ReadForms(text);
  Scenario s;
  s.rules = RuleLibrary::Builtin();
  s.operators = OperatorLibrary::Builtin();

  // Group forms under their section keywords.
  size_t i = 0;
  bool saw_agents = false, saw_expectation = false;
  std::optional<Term> expectation_form;

  auto need_agent = [&](const SExpr& kw) -> std::string {
    if (i >= forms.size() || !forms[i].IsAtom() || forms[i].IsKeyword())
      throw ParseError("section " + kw.text + " needs an agent name", kw.pos);
    return forms[i++].text;
  };

  // Belief sections accumulate first; agents may be declared up front or
  // the defaults q/r apply.
  std::vector<std::pair<Space, std::vector<Clause>>> shared_sections;
  std::map<std::string, std::vector<std::pair<Space, std::vector<Clause>>>>
      agent_sections;
  std::vector<Term> turn_props;
  std::vector<SExpr> expect_forms;

  while (i < forms.size()) {
    const SExpr& kw = forms[i];
    if (!kw.IsKeyword())
      throw ParseError("expected a section keyword, got '" + kw.text + "'",
                       kw.pos);
    ++i;
    auto collect_forms = [&]() {
      std::vector<SExpr> out;
      while (i < forms.size() && !forms[i].IsKeyword()) out.push_back(forms[i++]);
      return out;
    };
    const std::string& section = kw.text;
    if (section == ":agents") {
      s.q_agent = need_agent(kw);
      s.r_agent = need_agent(kw);
      saw_agents = true;
    } else if (section == ":shared-world" || section == ":discourse") {
      Space space = section == ":shared-world" ? Space::kSharedWorld
                                               : Space::kDiscourse;
      std::vector<Clause> cs;
      for (const SExpr& f : collect_forms()) cs.push_back(ClauseFromSExpr(f));
      shared_sections.emplace_back(space, std::move(cs));
    } else if (section == ":private" || section == ":about-other" ||
               section == ":weak-about-other") {
      std::string owner = need_agent(kw);
      Space space = section == ":private"
                        ? Space::kPrivate
                        : (section == ":about-other" ? Space::kAboutOther
                                                     : Space::kWeakAboutOther);
      std::vector<Clause> cs;
      for (const SExpr& f : collect_forms()) cs.push_back(ClauseFromSExpr(f));
      agent_sections[owner].emplace_back(space, std::move(cs));
    } else if (section == ":expectation") {
      if (i >= forms.size())
        throw ParseError(":expectation needs a form", kw.pos);
      expectation_form = TermFromSExpr(forms[i++]);
      saw_expectation = true;
    } else if (section == ":turn") {
      for (const SExpr& f : collect_forms())
        turn_props.push_back(TermFromSExpr(f));
    } else if (section == ":rules") {
      std::vector<Clause> cs;
      for (const SExpr& f : collect_forms()) cs.push_back(ClauseFromSExpr(f));
      s.rules.AddClauses(cs);
    } else if (section == ":operators") {
      while (i < forms.size() && forms[i].IsString()) {
        std::string path = base_dir + "/" + forms[i].text;
        s.operators.Merge(OperatorLibrary::Parse(ReadFile(path)));
        ++i;
      }
    } else if (section == ":expect") {
      for (const SExpr& f : collect_forms()) expect_forms.push_back(f);
    } else {
      throw ParseError("unknown section " + section, kw.pos);
    }
  }

  if (!saw_agents) {
    s.q_agent = "q";
    s.r_agent = "r";
  }
  if (!saw_expectation)
    throw std::runtime_error("scenario is missing an :expectation section");

  // (informif <responder> <questioner> <prop>)
  const Term& e = *expectation_form;
  if (!e.IsCompound() || e.symbol() != "informif" || e.arity() != 3 ||
      !e.args()[0].IsConstant() || !e.args()[1].IsConstant()) {
    throw std::runtime_error(
        "expectation must be (informif <responder> <questioner> <prop>)");
  }
  s.expectation.speaker = e.args()[0].symbol();
  s.expectation.hearer = e.args()[1].symbol();
  s.expectation.prop = e.args()[2];
  if (s.expectation.speaker != s.r_agent ||
      s.expectation.hearer != s.q_agent) {
    throw std::runtime_error(
        "expectation agents must match :agents (questioner, responder)");
  }

  s.q_base = BeliefBase(s.q_agent, s.r_agent);
  s.r_base = BeliefBase(s.r_agent, s.q_agent);
  for (BeliefBase* base : {&s.q_base, &s.r_base}) {
    base->AssertAll(Space::kSharedWorld, PreludeClauses());
    for (const auto& [space, cs] : shared_sections) base->AssertAll(space, cs);
  }
  // The expectation itself is part of the discourse record.
  Clause exp_fact;
  exp_fact.head =
      Term::MakeCompound("discourse-expectation", {s.expectation.Informif()});
  s.q_base.Assert(Space::kDiscourse, exp_fact);
  s.r_base.Assert(Space::kDiscourse, exp_fact);
  for (const auto& [owner, sections] : agent_sections) {
    BeliefBase* base = owner == s.q_agent
                           ? &s.q_base
                           : (owner == s.r_agent ? &s.r_base : nullptr);
    if (base == nullptr)
      throw std::runtime_error("belief section names unknown agent '" +
                               owner + "'");
    for (const auto& [space, cs] : sections) base->AssertAll(space, cs);
  }

  for (size_t k = 0; k < turn_props.size(); ++k)
    s.turn.push_back(Utterance{static_cast<int>(k), turn_props[k]});

  for (const SExpr& f : expect_forms) {
    if (!f.IsList() || f.items.empty() || !f.items[0].IsAtom())
      throw ParseError("malformed :expect form", f.pos);
    const std::string& tag = f.items[0].text;
    if (tag == "top-answer" && f.items.size() == 2) {
      s.expect.top_op = f.items[1].text;
    } else if (tag == "top-counts" && f.items.size() == 3) {
      s.expect.top_counts = {ParseInt(f.items[1]), ParseInt(f.items[2])};
    } else if (tag == "utterances") {
      std::vector<Term> us;
      for (size_t k = 1; k < f.items.size(); ++k)
        us.push_back(TermFromSExpr(f.items[k]));
      s.expect.utterances = std::move(us);
    } else if (tag == "no-candidates" && f.items.size() == 1) {
      s.expect.no_candidates = true;
    } else {
      throw ParseError("unknown :expect form '" + tag + "'", f.pos);
    }
  }
  return s;
}

Scenario LoadScenario(const std::string& path) {
  return LoadScenarioText(ReadFile(path), DirName(path));
}

namespace {

// Approximate mode analysis: walking the antecedents left to right, a
// positive literal grounds its variables (facts enumerate), a builtin
// before grounds its arguments, and negation grounds nothing. Generative
// rules leave no p-pattern variable unground; unless literals must not
// mention variables still unground when reached.
void CheckRuleModes(const RuleLibrary& rules, ValidationReport* report) {
  for (const CoherenceRule& rule : rules.coherence_rules()) {
    std::set<std::string> grounded;
    rule.q_pattern.CollectVariables(&grounded);
    for (const Literal& lit : rule.antecedents) {
      std::set<std::string> vars;
      lit.atom.CollectVariables(&vars);
      if (lit.positive) {
        grounded.insert(vars.begin(), vars.end());
      } else {
        for (const std::string& v : vars) {
          if (!grounded.count(v)) {
            report->warnings.push_back(
                "rule for " + std::string(RelationName(rule.relation)) +
                ": unless literal " + PrintTerm(lit.atom) +
                " reads ?" + v + " before anything grounds it");
          }
        }
      }
    }
    std::set<std::string> pvars;
    rule.p_pattern.CollectVariables(&pvars);
    for (const std::string& v : pvars) {
      if (!grounded.count(v)) {
        report->warnings.push_back(
            "non-generative rule for " +
            std::string(RelationName(rule.relation)) + ": ?" + v +
            " in the consequent is grounded by no antecedent");
      }
    }
  }
}

// Dependency cycle through negation anywhere in the rule set or spaces.
void CheckUnlessCycles(const Scenario& s, ValidationReport* report) {
  std::map<std::string, std::vector<std::pair<std::string, bool>>> graph;
  auto add_clause = [&](const Clause& c) {
    if (!c.head.IsCompound()) return;
    for (const Literal& l : c.body) {
      if (!l.atom.IsCompound()) continue;
      graph[c.head.symbol()].push_back({l.atom.symbol(), !l.positive});
    }
  };
  for (const Clause& c : s.rules.clauses()) add_clause(c);
  for (const BeliefBase* base : {&s.q_base, &s.r_base}) {
    for (int sp = 0; sp < kSpaceCount; ++sp) {
      for (const Clause& c : base->clauses(static_cast<Space>(sp)))
        add_clause(c);
    }
  }
  // DFS from each predicate looking for a cycle back to it that crosses at
  // least one negative edge.
  std::set<std::string> reported;
  for (const auto& [start, _] : graph) {
    std::set<std::string> on_path;
    std::function<bool(const std::string&, bool)> dfs =
        [&](const std::string& node, bool saw_neg) -> bool {
      if (!on_path.insert(node).second) return false;
      bool found = false;
      auto it = graph.find(node);
      if (it != graph.end()) {
        for (const auto& [next, neg] : it->second) {
          if (next == start && (saw_neg || neg)) {
            found = true;
            break;
          }
          if (dfs(next, saw_neg || neg)) {
            found = true;
            break;
          }
        }
      }
      on_path.erase(node);
      return found;
    };
    if (dfs(start, false) && reported.insert(start).second) {
      report->warnings.push_back("unless cycle reachable from predicate '" +
                                 start + "'");
    }
  }
}

}  // namespace

ValidationReport ValidateScenario(const Scenario& s) {
  ValidationReport report;
  if (!s.expectation.prop.Ground())
    report.errors.push_back("questioned proposition is not ground");
  for (const Utterance& u : s.turn) {
    if (!u.prop.Ground())
      report.errors.push_back("utterance " + std::to_string(u.index) +
                              " is not ground");
  }
  if (s.q_base.clauses(Space::kSharedWorld).size() <=
      PreludeClauses().size()) {
    report.warnings.push_back("no :shared-world facts beyond the prelude");
  }
  for (const PlanOperator& op : s.operators.operators()) {
    if (!op.top_level && op.stimulus.empty())
      report.errors.push_back("operator '" + op.name +
                              "' lacks stimulus conditions");
  }
  CheckRuleModes(s.rules, &report);
  CheckUnlessCycles(s, &report);
  return report;
}

}  // namespace replika
