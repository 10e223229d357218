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

#include <random>

#include "kb_oracle.hpp"
#include "replika/coherence.hpp"
#include "replika/kb.hpp"
#include "test_util.hpp"

using namespace replika;

namespace {

BeliefBase BaseWith(const std::string& text, Space space = Space::kPrivate) {
  BeliefBase base("r", "q");
  base.AssertAll(space, ParseClauses(text));
  return base;
}

}  // namespace

TEST_CASE("clause text format: facts and rules") {
  std::vector<Clause> cs = ParseClauses(
      ";; a fact and a rule\n"
      "(state (running r-car))\n"
      "((plausible (cr-obstacle (not (in-state ?sq ?tq)) (not (occur ?ep ?tp))))\n"
      " <- (state ?sq) (event ?ep) (timeperiod ?tq) (timeperiod ?tp)\n"
      "    (before ?tq ?tp) (app-cond ?sq ?ep)\n"
      "    (unless (in-state ?sq ?tq)) (unless (occur ?ep ?tp)))\n");
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].body.empty());
  CHECK(cs[1].body.size() == 8);
  CHECK(cs[1].body[5].positive);
  CHECK_FALSE(cs[1].body[6].positive);
  CHECK(cs[1].head.symbol() == "plausible");
}

TEST_CASE("unit-clause lookup") {
  BeliefBase base = BaseWith("(state (running r-car))");
  ProofView view = MakeView(base, ViewMode::kPrivate);
  Prover prover(view, 8);
  CHECK(prover.Provable(ParseTerm("(state (running r-car))")));
  CHECK_FALSE(prover.Provable(ParseTerm("(state (flying r-car))")));
  auto sols = prover.Solutions(ParseTerm("(state ?x)"));
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].Apply(ParseTerm("?x")) == ParseTerm("(running r-car)"));
}

TEST_CASE("make_view selects the documented spaces") {
  BeliefBase base("r", "q");
  base.AssertAll(Space::kSharedWorld, ParseClauses("(w shared)"));
  base.AssertAll(Space::kDiscourse, ParseClauses("(w disc)"));
  base.AssertAll(Space::kPrivate, ParseClauses("(w priv)"));
  base.AssertAll(Space::kAboutOther, ParseClauses("(w about)"));
  base.AssertAll(Space::kWeakAboutOther, ParseClauses("(w weak)"));

  Prover mutual(MakeView(base, ViewMode::kMutualWith, "q"), 8);
  CHECK(mutual.Provable(ParseTerm("(w shared)")));
  CHECK(mutual.Provable(ParseTerm("(w disc)")));
  CHECK_FALSE(mutual.Provable(ParseTerm("(w priv)")));
  CHECK_FALSE(mutual.Provable(ParseTerm("(w about)")));  // invisible here
  CHECK_FALSE(mutual.Provable(ParseTerm("(w weak)")));

  Prover priv(MakeView(base, ViewMode::kPrivate), 8);
  CHECK(priv.Provable(ParseTerm("(w shared)")));
  CHECK(priv.Provable(ParseTerm("(w about)")));
  CHECK_FALSE(priv.Provable(ParseTerm("(w weak)")));  // only via suspect/2

  CHECK_THROWS_AS(MakeView(base, ViewMode::kMutualWith, "r"),
                  std::invalid_argument);
}

TEST_CASE("private view on an empty base proves nothing") {
  BeliefBase base("r", "q");
  Prover prover(MakeView(base, ViewMode::kPrivate), 8);
  CHECK_FALSE(prover.Provable(ParseTerm("(anything at-all)")));
}

TEST_CASE("believe and suspect wrappers") {
  BeliefBase base("r", "q");
  base.AssertAll(Space::kPrivate, ParseClauses("(fact mine)"));
  base.AssertAll(Space::kAboutOther, ParseClauses("(fact theirs)"));
  base.AssertAll(Space::kWeakAboutOther, ParseClauses("(surprised q x)"));
  Prover priv(MakeView(base, ViewMode::kPrivate), 8);

  CHECK(priv.Provable(ParseTerm("(believe r (fact mine))")));
  CHECK_FALSE(priv.Provable(ParseTerm("(believe q (fact mine))")));
  CHECK(priv.Provable(ParseTerm("(believe q (fact theirs))")));
  CHECK(priv.Provable(ParseTerm("(suspect r (surprised q x))")));
  CHECK_FALSE(priv.Provable(ParseTerm("(suspect r (fact mine))")));
  // The weak space stays out of mutual proofs entirely.
  Prover mutual(MakeView(base, ViewMode::kMutualWith, "q"), 8);
  CHECK_FALSE(mutual.Provable(ParseTerm("(suspect r (surprised q x))")));
}

TEST_CASE("before builtin: fixed ordering, reflexive, clause fall-through") {
  BeliefBase base = BaseWith("(before saturday sunday)");
  Prover prover(MakeView(base, ViewMode::kPrivate), 8);
  CHECK(prover.Provable(ParseTerm("(before past future)")));
  CHECK(prover.Provable(ParseTerm("(before present present)")));
  CHECK_FALSE(prover.Provable(ParseTerm("(before future past)")));
  CHECK(prover.Provable(ParseTerm("(before saturday sunday)")));
  CHECK(prover.Provable(ParseTerm("(before saturday saturday)")));
  CHECK_FALSE(prover.Provable(ParseTerm("(before sunday saturday)")));
  auto sols = prover.Solutions(ParseTerm("(before past ?x)"));
  CHECK(sols.size() == 3);  // past itself, present, future
}

TEST_CASE("unless is the exact complement of provability") {
  std::mt19937 rng(17);
  for (int i = 0; i < 40; ++i) {
    testing::GroundProgram prog = testing::RandomStratifiedProgram(rng, 20);
    BeliefBase base("r", "q");
    base.AssertAll(Space::kPrivate, prog.clauses);
    // probe <- (unless a), asked at the same budget the direct query uses.
    for (const Term& a : prog.atom_pool) {
      BeliefBase probe_base = base;
      Clause probe;
      probe.head = ParseTerm("(naf-probe)");
      probe.body.push_back(Literal{false, a});
      probe_base.Assert(Space::kPrivate, probe);
      Prover prover(MakeView(probe_base, ViewMode::kPrivate), 64);
      CHECK(prover.Provable(ParseTerm("(naf-probe)")) ==
            !prover.Provable(a));
    }
  }
}

TEST_CASE("backward proving equals the forward fixpoint on stratified KBs") {
  std::mt19937 rng(23);
  for (int i = 0; i < 60; ++i) {
    testing::GroundProgram prog = testing::RandomStratifiedProgram(rng);
    std::set<Term> fix = testing::ForwardFixpoint(prog);
    BeliefBase base("r", "q");
    base.AssertAll(Space::kPrivate, prog.clauses);
    Prover prover(MakeView(base, ViewMode::kPrivate), 64);
    for (const Term& a : prog.atom_pool) {
      CHECK(prover.Provable(a) == (fix.count(a) > 0));
    }
  }
}

TEST_CASE("positive fragment is monotone under new clauses") {
  std::mt19937 rng(29);
  for (int i = 0; i < 30; ++i) {
    testing::GroundProgram prog = testing::RandomStratifiedProgram(rng, 15);
    // Strip every negated literal so the program is purely positive.
    for (Clause& c : prog.clauses) {
      std::vector<Literal> body;
      for (Literal& l : c.body) {
        if (l.positive) body.push_back(l);
      }
      c.body = std::move(body);
    }
    BeliefBase base("r", "q");
    base.AssertAll(Space::kPrivate, prog.clauses);
    Prover before_prover(MakeView(base, ViewMode::kPrivate), 64);
    std::set<Term> provable_before;
    for (const Term& a : prog.atom_pool) {
      if (before_prover.Provable(a)) provable_before.insert(a);
    }
    BeliefBase bigger = base;
    bigger.Assert(Space::kPrivate,
                  Clause{prog.atom_pool[i % prog.atom_pool.size()], {}});
    Prover after_prover(MakeView(bigger, ViewMode::kPrivate), 64);
    for (const Term& a : provable_before) CHECK(after_prover.Provable(a));
  }
}

TEST_CASE("budget exhaustion prunes quietly and is recorded") {
  BeliefBase base = BaseWith("((deep ?x) <- (deep ?x))");
  Trace trace;
  Prover prover(MakeView(base, ViewMode::kPrivate), 8, &trace);
  CHECK_FALSE(prover.Provable(ParseTerm("(deep a)")));
}

TEST_CASE("unless cycles are cut with a warning, not solved") {
  BeliefBase base =
      BaseWith("((p x) <- (unless (q x))) ((q x) <- (unless (p x)))");
  Trace trace;
  trace.enabled = true;
  Prover prover(MakeView(base, ViewMode::kPrivate), 16, &trace);
  prover.Provable(ParseTerm("(p x)"));
  CHECK(trace.naf_cycles > 0);
}

TEST_CASE("prove through attached rules: the shared store is visible") {
  RuleLibrary rules = RuleLibrary::Builtin();
  BeliefBase base("q", "r");
  base.AssertAll(Space::kSharedWorld,
                 ParseClauses("(timeperiod present) (timeperiod future) "
                              "(state (running r-car)) (event (go-shopping r)) "
                              "(app-cond (running r-car) (go-shopping r))"));
  ProofView mutual =
      MakeView(base, ViewMode::kMutualWith, "r", &rules.clauses());
  Prover prover(mutual, 8);
  CHECK(prover.Provable(ParseTerm(
      "(plausible (cr-obstacle (not (in-state (running r-car) present))"
      " (not (occur (go-shopping r) future))))")));
}
