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

#ifndef REPLIKA_PLANS_H_
#define REPLIKA_PLANS_H_

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "replika/coherence.hpp"
#include "replika/kb.hpp"
#include "replika/term.hpp"

namespace replika {

class OperatorError : public std::runtime_error {
 public:
  explicit OperatorError(const std::string& msg) : std::runtime_error(msg) {}
};

// Reference to a satellite operator with its argument terms, e.g.
// (use-obstacle s h (not ?p)). The third argument is the proposition
// pattern handed to the satellite's header.
struct SatelliteRef {
  std::string name;
  Term prop_pattern;
};

// A discourse plan operator: header parameters s, h, ?p; optional
// existential variables; applicability and stimulus conditions; a
// primitive inform nucleus; satellite references; primary goals.
//
// Top-level operators (the five answer types) have no stimulus conditions;
// satellite operators have at least one.
struct PlanOperator {
  std::string name;
  bool top_level = false;
  std::optional<AnswerType> answer_type;  // set for answer-* operators
  std::optional<Relation> relation;       // set for use-* operators
  std::vector<std::string> existential_vars;
  std::vector<Literal> applicability;
  std::vector<Literal> stimulus;
  Term nucleus_prop;  // proposition pattern of (inform s h <prop>)
  std::vector<SatelliteRef> satellites;
  std::vector<Term> primary_goals;
};

// Ordered operator store. Declaration order of the top-level operators is
// the recognition order and the ranking tie-break.
class OperatorLibrary {
 public:
  // Parses the operator DSL. Throws OperatorError naming the operator and
  // the violated invariant on validation failure; ParseError on syntax.
  static OperatorLibrary Parse(const std::string& text);
  static OperatorLibrary Builtin();

  // Override-by-name merge; unknown names are appended. Merging an empty
  // library is the identity.
  void Merge(const OperatorLibrary& overrides);

  const PlanOperator* Find(const std::string& name) const;
  const std::vector<PlanOperator>& operators() const { return ops_; }
  std::vector<const PlanOperator*> TopLevel() const;
  int IndexOf(const std::string& name) const;
  // Coherence relations reachable from the operator's satellite list.
  std::set<Relation> RelationsFor(AnswerType t) const;
  std::set<Relation> RelationsFor(const PlanOperator& op) const;

 private:
  std::vector<PlanOperator> ops_;
};

// An operator with header (and possibly existential) variables bound.
struct OperatorInstance {
  const PlanOperator* op = nullptr;
  Substitution bindings;

  Term Nucleus() const { return bindings.Apply(op->nucleus_prop); }
  std::vector<Literal> Applicability() const;
  std::vector<Literal> Stimulus() const;
  std::vector<Term> Goals() const;
};

// Binds s, h, and the header proposition ?p. Deterministic: equal inputs
// produce equal instances.
OperatorInstance Instantiate(const PlanOperator& op, const std::string& s,
                             const std::string& h, const Term& p);

// The shared expectation, created by the question, that the responder will
// evaluate the questioned proposition: (informif s h p).
struct DiscourseExpectation {
  std::string speaker;  // s, the responder
  std::string hearer;   // h, the questioner
  Term prop;            // the questioned proposition, ground

  Term Informif() const {
    return Term::MakeCompound(
        "informif", {Term::MakeConstant(speaker), Term::MakeConstant(hearer),
                     prop});
  }
};

// A leaf inform act: explicit (with its utterance index) or hypothesized.
struct InformLeaf {
  Term prop;
  bool hypothesized = false;
  int utterance_index = -1;

  bool operator==(const InformLeaf& o) const {
    return prop == o.prop && hypothesized == o.hypothesized &&
           utterance_index == o.utterance_index;
  }
};

// One operator instance in a realized plan. `order` is the realization
// sequence: -1 names the nucleus, other entries index `satellites`.
// Realization order is meaningful; trees differing only in satellite order
// are distinct values.
struct PlanNode {
  std::string op_name;
  std::optional<AnswerType> answer_type;
  Term header;                     // bound ?p
  std::optional<Term> existential; // bound ?q, for satellite operators
  InformLeaf nucleus;
  std::vector<PlanNode> satellites;
  std::vector<int> order;

  bool operator==(const PlanNode& o) const;
};

struct PlanTree {
  PlanNode root;

  bool operator==(const PlanTree& o) const { return root == o.root; }
};

// Leaf inform acts, left to right in realization order.
std::vector<const InformLeaf*> Frontier(const PlanTree& tree);
std::vector<InformLeaf*> MutableFrontier(PlanTree* tree);

int HypothesizedCount(const PlanTree& tree);
int ExplicitCount(const PlanTree& tree);

// Structural equality ignoring the explicit/hypothesized tags and
// utterance indices on leaves.
bool EqualModuloTags(const PlanTree& a, const PlanTree& b);

// Machine form; parses back to an equal tree.
std::string SerializePlan(const PlanTree& tree);
PlanTree ParsePlan(const std::string& text);

// Human-readable indented rendering.
std::string FormatPlan(const PlanTree& tree, int indent = 0);

}  // namespace replika

#endif  // REPLIKA_PLANS_H_
