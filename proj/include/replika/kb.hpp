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

#ifndef REPLIKA_KB_H_
#define REPLIKA_KB_H_

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "replika/term.hpp"

namespace replika {

// Belief spaces of one agent. Shared-world and discourse content is
// taken to be mutually believed with the other agent; weak-about-other
// holds "suspects" and is reachable only through the suspect/2 wrapper.
enum class Space {
  kSharedWorld = 0,
  kDiscourse = 1,
  kPrivate = 2,
  kAboutOther = 3,
  kWeakAboutOther = 4,
};
inline constexpr int kSpaceCount = 5;

const char* SpaceName(Space s);

// A body literal: a positive atom or unless(atom), where unless(p)
// succeeds exactly when p is not provable.
struct Literal {
  bool positive = true;
  Term atom;

  bool operator==(const Literal& o) const {
    return positive == o.positive && atom == o.atom;
  }
};

// Definite clause with negation-as-failure literals allowed in the body.
// A fact is a clause with an empty body.
struct Clause {
  Term head;
  std::vector<Literal> body;

  bool operator==(const Clause& o) const {
    return head == o.head && body == o.body;
  }
};

// Clause text format: a fact is a plain form; a rule is
//   ((head) <- antecedent1 ... antecedentN)
// with (unless g) marking negation-as-failure antecedents.
std::vector<Clause> ParseClauses(const std::string& text);
Clause ClauseFromSExpr(const SExpr& form);
std::string PrintClause(const Clause& c);
Literal LiteralFromTerm(const Term& t);

// Labeled clause spaces of a single agent in a two-agent dialogue.
class BeliefBase {
 public:
  BeliefBase() = default;
  BeliefBase(std::string agent, std::string other)
      : agent_(std::move(agent)), other_(std::move(other)) {}

  const std::string& agent() const { return agent_; }
  const std::string& other() const { return other_; }

  void Assert(Space space, Clause c);
  void AssertAll(Space space, const std::vector<Clause>& cs);
  // Removes every fact whose head equals `head`; returns how many.
  int RemoveFact(Space space, const Term& head);
  const std::vector<Clause>& clauses(Space space) const;
  size_t TotalClauses() const;

 private:
  std::string agent_ = "a";
  std::string other_ = "b";
  std::array<std::vector<Clause>, kSpaceCount> spaces_;
};

enum class ViewMode { kPrivate, kMutualWith };

// A proof view selects which spaces of a base a proof may use, plus a
// shared rule set (pragmatic knowledge common to both agents).
//  - private: all spaces except weak-about-other
//  - mutual-with(other): shared-world and discourse only
// The weak space is reachable only via suspect/2 (see Prover).
struct ProofView {
  const BeliefBase* base = nullptr;
  std::vector<Space> spaces;
  const std::vector<Clause>* rules = nullptr;
};

// Throws std::invalid_argument on an unknown mode combination (e.g.
// mutual-with naming the base's own agent).
ProofView MakeView(const BeliefBase& base, ViewMode mode,
                   const std::string& other_agent = "",
                   const std::vector<Clause>* rules = nullptr);

// Diagnostics sink. Collects budget prunes, negation cycles, and
// non-generative rule warnings; never changes results.
struct Trace {
  bool enabled = false;
  int budget_prunes = 0;
  int naf_cycles = 0;
  std::vector<std::string> lines;

  void Note(const std::string& line) {
    if (enabled) lines.push_back(line);
  }
};

// Bounded backward-chaining prover over a proof view.
//
// Budget counts resolution-tree depth; exhausting it silently prunes the
// branch (recorded in the trace). unless(p) re-uses the remaining budget.
// Builtins:
//   (before t1 t2)   fixed past < present < future ordering, reflexive on
//                    equal terms, then falls through to view clauses
//   (believe a p)    a = base agent: p in this view; a = the other agent:
//                    p against shared, discourse, and about-other
//   (suspect a p)    a = base agent: p against the weak space only
class Prover {
 public:
  Prover(const ProofView& view, int budget, Trace* trace = nullptr)
      : view_(view), budget_(budget), trace_(trace) {}

  bool Provable(const Term& goal,
                const Substitution& seed = Substitution()) const;

  // Every substitution (projected onto the goal's variables plus the seed
  // domain) under which the goal is derivable. Finite; may repeat.
  std::vector<Substitution> Solutions(const Term& goal,
                                      const Substitution& seed = Substitution(),
                                      size_t limit = kNoLimit) const;

  // Conjunction of literals solved left to right in this view.
  std::vector<Substitution> SolveBody(const std::vector<Literal>& body,
                                      const Substitution& seed = Substitution(),
                                      size_t limit = kNoLimit) const;

  static constexpr size_t kNoLimit = static_cast<size_t>(-1);

 private:
  struct Frame {
    const Term* goal;
    const Frame* parent;
    bool naf;
  };
  using Sink = std::function<bool(const Substitution&)>;

  bool Solve(const Term& goal, const Substitution& s, int depth,
             const Frame* frames, const Sink& sink) const;
  bool SolveLiterals(const std::vector<Literal>& body, size_t idx,
                     const Substitution& s, int depth, const Frame* frames,
                     const Sink& sink) const;
  bool SolveClauses(const Term& goal, const Substitution& s, int depth,
                    const Frame* frames, const Sink& sink) const;
  Term RenameApart(const Term& t) const;

  ProofView view_;
  int budget_;
  Trace* trace_;
  mutable long rename_counter_ = 0;
};

// Spec-level convenience: all solutions of `goal` in `view`.
std::vector<Substitution> Prove(const Term& goal, const ProofView& view,
                                int budget, Trace* trace = nullptr);

}  // namespace replika

#endif  // REPLIKA_KB_H_
