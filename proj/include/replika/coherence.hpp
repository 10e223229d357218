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

#ifndef REPLIKA_COHERENCE_H_
#define REPLIKA_COHERENCE_H_

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "replika/kb.hpp"
#include "replika/term.hpp"

namespace replika {

// The five answer types, in declaration order. The order doubles as the
// deterministic tie-break during candidate ranking.
enum class AnswerType { kYes = 0, kNo, kHedged, kMaybe, kMaybeNot };

const char* AnswerTypeName(AnswerType t);
std::optional<AnswerType> AnswerTypeFromOperatorName(const std::string& name);

// Coherence relations constraining what counts as a relevant indirect
// answer. Directional: (cr-X q p) relates satellite content q to nucleus
// content p and is not assumed symmetric.
enum class Relation {
  kObstacle = 0,
  kCondition,
  kCause,
  kElaboration,
  kOtherwise,
  kContrast,
};

const char* RelationName(Relation r);  // "cr-obstacle" etc.
// Accepts "cr-<name>" or "use-<name>". Throws std::invalid_argument on an
// unknown relation name.
Relation RelationFromName(const std::string& name);

// A rule whose consequent is (plausible (cr-X q p)). Classified out of the
// ordinary clause store so hypothesis generation can drive it forward.
struct CoherenceRule {
  Relation relation;
  Term q_pattern;
  Term p_pattern;
  std::vector<Literal> antecedents;
};

// The shared pragmatic rule store: coherence rules, relation-belief
// bridges, and stimulus-condition definitions, all as ordinary clauses.
// Everything is data; scenario files may extend it.
class RuleLibrary {
 public:
  static RuleLibrary Builtin();
  static RuleLibrary FromText(const std::string& text);

  void AddClauses(const std::vector<Clause>& cs);
  const std::vector<Clause>& clauses() const { return clauses_; }
  const std::vector<CoherenceRule>& coherence_rules() const {
    return coherence_;
  }
  std::vector<const CoherenceRule*> RulesFor(Relation r) const;
  // Stimulus predicate names (heads of arity-4 rules that are not
  // coherence or bridge clauses), plus the builtin three.
  const std::set<std::string>& stimulus_predicates() const {
    return stimulus_preds_;
  }

 private:
  std::vector<Clause> clauses_;
  std::vector<CoherenceRule> coherence_;
  std::set<std::string> stimulus_preds_;
};

// True iff some rule for `rel` has provable antecedents under the bindings
// fixing its q-pattern to q and p-pattern to p. Evaluated by solving the
// rule antecedents directly, so tests can cross-check it against proving
// the (plausible ...) goal through the clause store.
bool Plausible(Relation rel, const Term& q, const Term& p,
               const ProofView& view, int budget, Trace* trace = nullptr);

// All (rel, p) with p ground such that Plausible(rel, p0, p) holds: p0
// fills the satellite (q) slot and the returned term fills the nucleus (p)
// slot, the direction hypothesis generation expands in. Duplicate-free.
// Rules whose p-side stays unground yield a trace warning naming the rule.
std::vector<std::pair<Relation, Term>> RelatedAntecedents(
    const Term& p0, const std::set<Relation>& relations, const ProofView& view,
    int budget, Trace* trace = nullptr);

}  // namespace replika

#endif  // REPLIKA_COHERENCE_H_
