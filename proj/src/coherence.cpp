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

#include "replika/coherence.hpp"

#include <stdexcept>

#include "replika/defaults.hpp"

namespace replika {

const char* AnswerTypeName(AnswerType t) {
  switch (t) {
    case AnswerType::kYes:
      return "answer-yes";
    case AnswerType::kNo:
      return "answer-no";
    case AnswerType::kHedged:
      return "answer-hedged";
    case AnswerType::kMaybe:
      return "answer-maybe";
    case AnswerType::kMaybeNot:
      return "answer-maybenot";
  }
  return "?";
}

std::optional<AnswerType> AnswerTypeFromOperatorName(const std::string& name) {
  for (AnswerType t : {AnswerType::kYes, AnswerType::kNo, AnswerType::kHedged,
                       AnswerType::kMaybe, AnswerType::kMaybeNot}) {
    if (name == AnswerTypeName(t)) return t;
  }
  return std::nullopt;
}

const char* RelationName(Relation r) {
  switch (r) {
    case Relation::kObstacle:
      return "cr-obstacle";
    case Relation::kCondition:
      return "cr-condition";
    case Relation::kCause:
      return "cr-cause";
    case Relation::kElaboration:
      return "cr-elaboration";
    case Relation::kOtherwise:
      return "cr-otherwise";
    case Relation::kContrast:
      return "cr-contrast";
  }
  return "?";
}

Relation RelationFromName(const std::string& name) {
  std::string key = name;
  if (key.rfind("use-", 0) == 0) key = "cr-" + key.substr(4);
  for (Relation r :
       {Relation::kObstacle, Relation::kCondition, Relation::kCause,
        Relation::kElaboration, Relation::kOtherwise, Relation::kContrast}) {
    if (key == RelationName(r)) return r;
  }
  throw std::invalid_argument("unknown coherence relation name: " + name);
}

namespace {

// Recognizes clause heads of the shape (plausible (cr-X q p)).
std::optional<CoherenceRule> ClassifyCoherence(const Clause& c) {
  const Term& h = c.head;
  if (!h.IsCompound() || h.symbol() != "plausible" || h.arity() != 1)
    return std::nullopt;
  const Term& rel = h.args()[0];
  if (!rel.IsCompound() || rel.arity() != 2) return std::nullopt;
  Relation r;
  try {
    r = RelationFromName(rel.symbol());
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  CoherenceRule out;
  out.relation = r;
  out.q_pattern = rel.args()[0];
  out.p_pattern = rel.args()[1];
  out.antecedents = c.body;
  return out;
}

bool IsBridgeClause(const Clause& c) {
  if (!c.head.IsCompound() || c.head.arity() != 2) return false;
  try {
    RelationFromName(c.head.symbol());
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

RuleLibrary RuleLibrary::Builtin() {
  return FromText(kDefaultRuleText);
}

RuleLibrary RuleLibrary::FromText(const std::string& text) {
  RuleLibrary lib;
  lib.stimulus_preds_ = {"explanation-indicated", "excuse-indicated",
                         "followup-anticipated"};
  lib.AddClauses(ParseClauses(text));
  return lib;
}

void RuleLibrary::AddClauses(const std::vector<Clause>& cs) {
  for (const Clause& c : cs) {
    clauses_.push_back(c);
    if (std::optional<CoherenceRule> r = ClassifyCoherence(c)) {
      coherence_.push_back(std::move(*r));
    } else if (!IsBridgeClause(c) && c.head.IsCompound() &&
               c.head.arity() == 4 && !c.body.empty()) {
      stimulus_preds_.insert(c.head.symbol());
    }
  }
}

std::vector<const CoherenceRule*> RuleLibrary::RulesFor(Relation r) const {
  std::vector<const CoherenceRule*> out;
  for (const CoherenceRule& rule : coherence_) {
    if (rule.relation == r) out.push_back(&rule);
  }
  return out;
}

bool Plausible(Relation rel, const Term& q, const Term& p,
               const ProofView& view, int budget, Trace* trace) {
  if (view.rules == nullptr) return false;
  // Antecedent route: unify both patterns, then solve the rule body. The
  // goal route (proving the (plausible ...) clause head) must agree; tests
  // hold the two routes against each other.
  for (const Clause& c : *view.rules) {
    std::optional<CoherenceRule> rule = ClassifyCoherence(c);
    if (!rule || rule->relation != rel) continue;
    std::optional<Substitution> s = Unify(rule->q_pattern, q);
    if (!s) continue;
    s = Unify(rule->p_pattern, p, *s);
    if (!s) continue;
    Prover prover(view, budget, trace);
    if (!prover.SolveBody(rule->antecedents, *s, 1).empty()) return true;
  }
  return false;
}

std::vector<std::pair<Relation, Term>> RelatedAntecedents(
    const Term& p0, const std::set<Relation>& relations, const ProofView& view,
    int budget, Trace* trace) {
  std::vector<std::pair<Relation, Term>> out;
  std::set<std::pair<int, Term>> seen;
  if (view.rules == nullptr) return out;
  for (const Clause& c : *view.rules) {
    std::optional<CoherenceRule> rule = ClassifyCoherence(c);
    if (!rule || !relations.count(rule->relation)) continue;
    Relation rel = rule->relation;
    std::optional<Substitution> s = Unify(rule->q_pattern, p0);
    if (!s) continue;
    Prover prover(view, budget, trace);
    bool warned = false;
    for (const Substitution& sol : prover.SolveBody(rule->antecedents, *s)) {
      Term candidate = sol.Apply(rule->p_pattern);
      if (!candidate.Ground()) {
        if (trace && !warned) {
          trace->Note("warning: non-generative rule for " +
                      std::string(RelationName(rel)) + " leaves " +
                      PrintTerm(candidate) + " unground");
          warned = true;
        }
        continue;
      }
      if (seen.insert({static_cast<int>(rel), candidate}).second)
        out.emplace_back(rel, std::move(candidate));
    }
  }
  return out;
}

}  // namespace replika
