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

#ifndef REPLIKA_INTERPRET_H_
#define REPLIKA_INTERPRET_H_

#include <set>
#include <string>
#include <vector>

#include "replika/config.hpp"
#include "replika/plans.hpp"

namespace replika {

// One utterance of the responder's turn: position plus the ground
// proposition it conveys. The caller (a discourse controller) hands the
// recognizer exactly the answer-bearing utterances.
struct Utterance {
  int index = 0;
  Term prop;
};

// A recognized answer plan. accounted = explicit leaves, hypothesized =
// hypothesized leaves; both are read off the tree.
struct CandidatePlan {
  PlanTree tree;
  std::string op_name;
  int op_index = 0;  // declaration order of the top-level operator
  std::optional<AnswerType> answer_type;
  int hypothesized = 0;
  int accounted = 0;
  Term direct_answer;  // root nucleus proposition
};

// Shared engine state: rules and operators are immutable after scenario
// load, so everything here is safe to share across sessions.
struct Engine {
  const RuleLibrary* rules = nullptr;
  const OperatorLibrary* ops = nullptr;
  RunConfig cfg;
  Trace* trace = nullptr;
};

// One step of a hypothesis chain: the relation used and the proposition
// reached. A chain runs from the uttered proposition toward the operator's
// pending existential; every proposition on it becomes hypothesized plan
// content.
struct HypChain {
  struct Step {
    Relation rel;
    Term prop;
  };
  std::vector<Step> steps;  // empty = the start already satisfies the goal
};

// Breadth-first hypothesis generation from p0. A goal node is a
// proposition q making (plausible (<pending_rel> q pending_p)) provable in
// `qmutual`. Expansion is restricted to `allowed` relations; chains are
// simple paths with no interior goal node; hypothesized propositions never
// duplicate anything in `excluded` (the explicit turn).
std::vector<HypChain> GenerateHypotheses(const Term& p0, Relation pending_rel,
                                         const Term& pending_p,
                                         const std::set<Relation>& allowed,
                                         const ProofView& qmutual,
                                         int max_depth,
                                         const std::vector<Term>& excluded,
                                         int budget, Trace* trace = nullptr);

// True iff no instantiated applicability condition or primary goal of the
// instance is refuted from the questioner's viewpoint:
//  - (plausible ...) conditions must be provable in the mutual view
//  - unless(g) conditions fail only if g is provable in the mutual view
//  - discourse-expectation conditions must match `exp`
//  - everything else is consistent unless the private view proves its
//    negation or proves the responder believes the negation
bool CheckConsistency(const OperatorInstance& inst,
                      const DiscourseExpectation& exp,
                      const BeliefBase& q_base, const Engine& engine);

// All realizations of `inst` over turn[lo, hi): every utterance in the
// span lands on exactly one leaf, and sibling subtrees cover disjoint,
// non-interleaved index intervals. Satellite order is unconstrained.
std::vector<PlanTree> MatchSpan(const OperatorInstance& inst,
                                const DiscourseExpectation& exp,
                                const std::vector<Utterance>& turn, int lo,
                                int hi, const BeliefBase& q_base,
                                const Engine& engine);

// Answer recognition from the questioner's viewpoint: ranked candidate
// plans whose explicit leaves cover the turn exactly. An empty result
// signals recognition failure.
std::vector<CandidatePlan> InterpretAnswer(const DiscourseExpectation& exp,
                                           const std::vector<Utterance>& turn,
                                           const BeliefBase& q_base,
                                           const Engine& engine);

// Sorts by the two preference criteria: fewer hypothesized propositions,
// then more accounted-for propositions. Pareto-incomparable candidates
// tie; ties order deterministically by answer-type declaration order and
// tree serialization.
void RankCandidates(std::vector<CandidatePlan>* cands);

// True when the first candidate strictly Pareto-dominates every other.
bool StrictTop(const std::vector<CandidatePlan>& cands);

// True when the first candidate is Pareto-tied with some other.
bool TiedAtTop(const std::vector<CandidatePlan>& cands);

}  // namespace replika

#endif  // REPLIKA_INTERPRET_H_
