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

#include "replika/term.hpp"
#include "test_util.hpp"

using namespace replika;

TEST_CASE("parse_term handles the working notation") {
  Term t = ParseTerm("(not (occur (go-shopping R) Future))");
  REQUIRE(t.IsCompound());
  CHECK(t.symbol() == "not");
  CHECK(t.arity() == 1);
  const Term& occur = t.args()[0];
  CHECK(occur.symbol() == "occur");
  CHECK(occur.arity() == 2);
  CHECK(occur.args()[1].symbol() == "future");  // case-normalized
  CHECK(PrintTerm(t) == "(not (occur (go-shopping r) future))");
}

TEST_CASE("parse_term single-token cases") {
  Term v = ParseTerm("?p");
  CHECK(v.IsVariable());
  CHECK(v.symbol() == "p");
  CHECK(ParseTerm("Mall").IsConstant());
}

TEST_CASE("parse_term reports position on malformed input") {
  CHECK_THROWS_AS(ParseTerm("(f (g a)"), ParseError);
  CHECK_THROWS_AS(ParseTerm("()"), ParseError);
  CHECK_THROWS_AS(ParseTerm("(?x a)"), ParseError);
  try {
    ParseTerm("(f\n  (g a)");
  } catch (const ParseError& e) {
    CHECK(e.pos().line == 1);
  }
}

TEST_CASE("comments are skipped") {
  Term t = ParseTerm(";; a remark\n(f a ;; inline\n b)");
  CHECK(PrintTerm(t) == "(f a b)");
}

TEST_CASE("print/parse round-trip on random terms") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    Term t = testing::RandomTerm(rng);
    CHECK(ParseTerm(PrintTerm(t)) == t);
  }
}

TEST_CASE("unify basics") {
  CHECK(Unify(ParseTerm("c"), ParseTerm("c")).has_value());
  CHECK(Unify(ParseTerm("c"), ParseTerm("c"))->empty());
  CHECK_FALSE(Unify(ParseTerm("c"), ParseTerm("d")).has_value());

  auto s = Unify(ParseTerm("?p"), ParseTerm("(occur (go-shopping r) future)"));
  REQUIRE(s.has_value());
  CHECK(s->Apply(ParseTerm("?p")) ==
        ParseTerm("(occur (go-shopping r) future)"));

  CHECK_FALSE(Unify(ParseTerm("?x"), ParseTerm("(f ?x)")).has_value());
  CHECK_FALSE(Unify(ParseTerm("(f a b)"), ParseTerm("(f a)")).has_value());
  CHECK_FALSE(Unify(ParseTerm("(f a)"), ParseTerm("(g a)")).has_value());
}

TEST_CASE("unify soundness: a unifier makes the terms identical") {
  std::mt19937 rng(11);
  int successes = 0;
  for (int i = 0; i < 2000; ++i) {
    Term a = testing::RandomTerm(rng);
    Term b = testing::RandomTerm(rng);
    if (auto s = Unify(a, b)) {
      ++successes;
      CHECK(s->Apply(a) == s->Apply(b));
    }
  }
  CHECK(successes > 10);  // the generator must exercise the success path
}

TEST_CASE("substitutions stay idempotent") {
  std::mt19937 rng(13);
  for (int i = 0; i < 500; ++i) {
    Term a = testing::RandomTerm(rng);
    Term b = testing::RandomTerm(rng);
    auto s = Unify(a, b);
    if (!s) continue;
    for (const auto& [var, value] : s->bindings()) {
      CHECK(s->Apply(value) == value);  // no bound var occurs in any value
    }
    Term once = s->Apply(a);
    CHECK(s->Apply(once) == once);
  }
}

TEST_CASE("negate is an involution on non-negated terms") {
  Term p = ParseTerm("(occur (go-shopping r) future)");
  CHECK(Negate(p) == ParseTerm("(not (occur (go-shopping r) future))"));
  CHECK(Negate(Negate(p)) == p);
}
