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

#ifndef REPLIKA_GENERATE_H_
#define REPLIKA_GENERATE_H_

#include <optional>
#include <vector>

#include "replika/interpret.hpp"

namespace replika {

// Output of the generation pipeline. The pruned plan is the full plan with
// zero or more leaves re-tagged from explicit to hypothesized; utterances
// are the remaining explicit leaves in realization order (semantic
// propositions only; surface wording is a later component's job).
struct GenerationResult {
  std::optional<AnswerType> answer_type;
  std::string op_name;
  PlanTree full;
  PlanTree pruned;
  std::vector<Term> utterances;
  std::vector<Term> adopted_goals;  // instantiated primary goals, in order
};

// Picks the top-level operator whose applicability conditions are provable
// in the responder's private view, trying yes/no before hedged before
// maybe/maybe-not (declaration order). nullopt tells the caller to fall
// back to an I-don't-know response.
std::optional<OperatorInstance> SelectAnswerType(
    const DiscourseExpectation& exp, const BeliefBase& r_base,
    const Engine& engine);

// True iff the stimulus predicate is provable from the responder's private
// view (the weak space is reachable through suspect/2). Throws
// std::invalid_argument on a predicate no stimulus rule defines.
bool EvalStimulus(const Term& pred, const BeliefBase& r_base,
                  const Engine& engine);

// Top-down expansion of the selected operator into a full answer plan. A
// satellite is included once per existential binding that passes the gate:
// all applicability conditions hold (plausibility against the mutual view,
// beliefs against the private view) and at least one stimulus condition
// holds. Expansion is depth-bounded and never repeats an
// (operator, proposition) pair.
PlanTree ExpandPlan(const OperatorInstance& inst, const BeliefBase& r_base,
                    const Engine& engine);

// Greedy right-to-left pruning: a leaf is re-tagged hypothesized when the
// simulated interpretation of the remaining utterances yields the full
// plan as the strict top candidate (a tie blocks pruning). Satellites are
// considered before their nucleus; the turn is never pruned to empty.
PlanTree PrunePlan(const PlanTree& full, const BeliefBase& r_model_of_q,
                   const DiscourseExpectation& exp, const Engine& engine);

// select -> expand -> prune. `r_model_of_q` is the belief base the pruning
// step interprets against (the responder's model of the questioner).
std::optional<GenerationResult> GenerateAnswer(const DiscourseExpectation& exp,
                                               const BeliefBase& r_base,
                                               const BeliefBase& r_model_of_q,
                                               const Engine& engine);

}  // namespace replika

#endif  // REPLIKA_GENERATE_H_
