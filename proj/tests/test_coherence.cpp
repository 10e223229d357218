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

#include <doctest.h>

#include "replika/coherence.hpp"
#include "replika/scenario.hpp"
#include "test_util.hpp"

using namespace replika;
using replika::testing::LoadFixture;

namespace {

// Ground proposition universe over the scenario's declared states, events,
// and time periods: every (in-state s t), (occur e t), and their
// negations. The exhaustive oracles quantify over this pool.
std::vector<Term> PropUniverse(const Scenario& s) {
  std::vector<Term> states, events, times;
  for (const Clause& c : s.q_base.clauses(Space::kSharedWorld)) {
    if (!c.body.empty() || !c.head.IsCompound()) continue;
    if (c.head.symbol() == "state") states.push_back(c.head.args()[0]);
    if (c.head.symbol() == "event") events.push_back(c.head.args()[0]);
    if (c.head.symbol() == "timeperiod") times.push_back(c.head.args()[0]);
  }
  std::vector<Term> out;
  for (const Term& t : times) {
    for (const Term& st : states) {
      Term pos = Term::MakeCompound("in-state", {st, t});
      out.push_back(pos);
      out.push_back(Negate(pos));
    }
    for (const Term& ev : events) {
      Term pos = Term::MakeCompound("occur", {ev, t});
      out.push_back(pos);
      out.push_back(Negate(pos));
    }
  }
  return out;
}

const std::set<Relation> kAllRelations = {
    Relation::kObstacle,    Relation::kCondition, Relation::kCause,
    Relation::kElaboration, Relation::kOtherwise, Relation::kContrast};

}  // namespace

TEST_CASE("the obstacle rule fires on the car-failure scenario") {
  Scenario s = LoadFixture("example1.scn");
  ProofView mutual =
      MakeView(s.q_base, ViewMode::kMutualWith, "r", &s.rules.clauses());
  Term q = ParseTerm("(not (in-state (running r-car) present))");
  Term p = ParseTerm("(not (occur (go-shopping r) future))");
  CHECK(Plausible(Relation::kObstacle, q, p, mutual, 8));

  SUBCASE("direction discipline: not symmetric") {
    CHECK_FALSE(Plausible(Relation::kObstacle, p, q, mutual, 8));
  }
  SUBCASE("temporal reversal fails the before antecedent") {
    Term q_late = ParseTerm("(not (in-state (running r-car) future))");
    Term p_early = ParseTerm("(not (occur (go-shopping r) present))");
    CHECK_FALSE(Plausible(Relation::kObstacle, q_late, p_early, mutual, 8));
  }
  SUBCASE("unknown relation name") {
    CHECK_THROWS_AS(RelationFromName("cr-banter"), std::invalid_argument);
  }
}

TEST_CASE("plausible (antecedent route) agrees with proving the goal") {
  Scenario s = LoadFixture("example1.scn");
  ProofView mutual =
      MakeView(s.q_base, ViewMode::kMutualWith, "r", &s.rules.clauses());
  Prover prover(mutual, 8);
  std::vector<Term> universe = PropUniverse(s);
  int holds = 0;
  for (const Term& q : universe) {
    for (const Term& p : universe) {
      for (Relation rel : kAllRelations) {
        Term goal = Term::MakeCompound(
            "plausible",
            {Term::MakeCompound(RelationName(rel), {q, p})});
        bool via_rule = Plausible(rel, q, p, mutual, 8);
        CHECK(via_rule == prover.Provable(goal));
        if (via_rule) ++holds;
      }
    }
  }
  CHECK(holds > 0);
}

TEST_CASE("related_antecedents walks from an utterance toward the answer") {
  Scenario s = LoadFixture("example1.scn");
  ProofView mutual =
      MakeView(s.q_base, ViewMode::kMutualWith, "r", &s.rules.clauses());
  Term axle = ParseTerm("(not (in-state (intact (axle r-car)) present))");
  auto related = RelatedAntecedents(axle, kAllRelations, mutual, 8);
  bool found = false;
  for (const auto& [rel, p] : related) {
    if (rel == Relation::kObstacle &&
        p == ParseTerm("(not (in-state (running r-car) present))")) {
      found = true;
    }
  }
  CHECK(found);

  SUBCASE("no matching rule yields an empty list") {
    CHECK(RelatedAntecedents(ParseTerm("(blorp)"), kAllRelations, mutual, 8)
              .empty());
  }

  SUBCASE("duplicate-free") {
    std::set<std::string> seen;
    for (const auto& [rel, p] : related) {
      std::string key = std::string(RelationName(rel)) + PrintTerm(p);
      CHECK(seen.insert(key).second);
    }
  }
}

TEST_CASE("related_antecedents equals the exhaustive filter") {
  Scenario s = LoadFixture("example1.scn");
  ProofView mutual =
      MakeView(s.q_base, ViewMode::kMutualWith, "r", &s.rules.clauses());
  std::vector<Term> universe = PropUniverse(s);
  for (const Term& p0 : universe) {
    std::set<std::string> via_engine;
    for (const auto& [rel, p] :
         RelatedAntecedents(p0, kAllRelations, mutual, 8)) {
      via_engine.insert(std::string(RelationName(rel)) + "|" + PrintTerm(p));
    }
    std::set<std::string> via_filter;
    for (const Term& p : universe) {
      for (Relation rel : kAllRelations) {
        if (Plausible(rel, p0, p, mutual, 8)) {
          via_filter.insert(std::string(RelationName(rel)) + "|" +
                            PrintTerm(p));
        }
      }
    }
    CHECK(via_engine == via_filter);
  }
}

TEST_CASE("rule-set modularity: dropping a relation's rules silences it") {
  // A synthetic store with one rule each for cause and elaboration.
  const char* both =
      "((plausible (cr-cause (in-state ?s ?t) (occur ?e ?t)))"
      " <- (state ?s) (event ?e) (timeperiod ?t) (motivates ?s ?e))\n"
      "((plausible (cr-elaboration (occur ?a ?t) (occur ?b ?t)))"
      " <- (event ?a) (event ?b) (timeperiod ?t) (specializes ?a ?b))";
  const char* cause_only =
      "((plausible (cr-cause (in-state ?s ?t) (occur ?e ?t)))"
      " <- (state ?s) (event ?e) (timeperiod ?t) (motivates ?s ?e))";
  BeliefBase base("q", "r");
  base.AssertAll(Space::kSharedWorld,
                 ParseClauses("(timeperiod present) (state sale) (event shop) "
                              "(event browse) (motivates sale shop) "
                              "(specializes browse shop)"));
  RuleLibrary with_both = RuleLibrary::FromText(both);
  RuleLibrary cause_lib = RuleLibrary::FromText(cause_only);
  Term q_cause = ParseTerm("(in-state sale present)");
  Term q_elab = ParseTerm("(occur browse present)");
  Term p = ParseTerm("(occur shop present)");

  ProofView v1 = MakeView(base, ViewMode::kMutualWith, "r", &with_both.clauses());
  CHECK(Plausible(Relation::kCause, q_cause, p, v1, 8));
  CHECK(Plausible(Relation::kElaboration, q_elab, p, v1, 8));

  ProofView v2 = MakeView(base, ViewMode::kMutualWith, "r", &cause_lib.clauses());
  CHECK(Plausible(Relation::kCause, q_cause, p, v2, 8));          // unaffected
  CHECK_FALSE(Plausible(Relation::kElaboration, q_elab, p, v2, 8));
  for (const Term& u : std::vector<Term>{q_cause, q_elab, p}) {
    for (const Term& w : std::vector<Term>{q_cause, q_elab, p}) {
      CHECK_FALSE(Plausible(Relation::kElaboration, u, w, v2, 8));
    }
  }
}

TEST_CASE("answer-type associations derived from the operator library") {
  OperatorLibrary ops = OperatorLibrary::Builtin();
  using R = Relation;
  CHECK(ops.RelationsFor(AnswerType::kYes) ==
        std::set<R>{R::kCondition, R::kCause, R::kElaboration});
  CHECK(ops.RelationsFor(AnswerType::kNo) ==
        std::set<R>{R::kOtherwise, R::kObstacle, R::kContrast});
  CHECK(ops.RelationsFor(AnswerType::kHedged) ==
        std::set<R>{R::kContrast, R::kElaboration});
  CHECK(ops.RelationsFor(AnswerType::kMaybe) ==
        std::set<R>{R::kCondition, R::kElaboration});
  CHECK(ops.RelationsFor(AnswerType::kMaybeNot) ==
        std::set<R>{R::kObstacle, R::kContrast});
}
