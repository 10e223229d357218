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

#include "replika/kb.hpp"

#include <algorithm>
#include <stdexcept>

namespace replika {

const char* SpaceName(Space s) {
  switch (s) {
    case Space::kSharedWorld:
      return "shared-world";
    case Space::kDiscourse:
      return "discourse";
    case Space::kPrivate:
      return "private";
    case Space::kAboutOther:
      return "about-other";
    case Space::kWeakAboutOther:
      return "weak-about-other";
  }
  return "?";
}

Literal LiteralFromTerm(const Term& t) {
  if (t.IsCompound() && t.symbol() == "unless" && t.arity() == 1)
    return Literal{false, t.args()[0]};
  return Literal{true, t};
}

Clause ClauseFromSExpr(const SExpr& form) {
  // Rule shape: a list whose second member is the bare symbol "<-".
  if (form.IsList() && form.items.size() >= 2 && form.items[1].IsAtom() &&
      form.items[1].text == "<-") {
    Clause c;
    c.head = TermFromSExpr(form.items[0]);
    for (size_t i = 2; i < form.items.size(); ++i)
      c.body.push_back(LiteralFromTerm(TermFromSExpr(form.items[i])));
    if (c.head.IsVariable())
      throw ParseError("clause head may not be a bare variable",
                       form.items[0].pos);
    return c;
  }
  Clause c;
  c.head = TermFromSExpr(form);
  if (c.head.IsVariable())
    throw ParseError("clause head may not be a bare variable", form.pos);
  return c;
}

std::vector<Clause> ParseClauses(const std::string& text) {
  std::vector<Clause> out;
  for (const SExpr& form : ReadForms(text)) out.push_back(ClauseFromSExpr(form));
  return out;
}

std::string PrintClause(const Clause& c) {
  if (c.body.empty()) return PrintTerm(c.head);
  std::string out = "(" + PrintTerm(c.head) + " <-";
  for (const Literal& l : c.body) {
    out += ' ';
    out += l.positive ? PrintTerm(l.atom)
                      : "(unless " + PrintTerm(l.atom) + ")";
  }
  out += ')';
  return out;
}

void BeliefBase::Assert(Space space, Clause c) {
  spaces_[static_cast<int>(space)].push_back(std::move(c));
}

void BeliefBase::AssertAll(Space space, const std::vector<Clause>& cs) {
  auto& v = spaces_[static_cast<int>(space)];
  v.insert(v.end(), cs.begin(), cs.end());
}

int BeliefBase::RemoveFact(Space space, const Term& head) {
  auto& v = spaces_[static_cast<int>(space)];
  size_t before = v.size();
  v.erase(std::remove_if(v.begin(), v.end(),
                         [&](const Clause& c) {
                           return c.body.empty() && c.head == head;
                         }),
          v.end());
  return static_cast<int>(before - v.size());
}

const std::vector<Clause>& BeliefBase::clauses(Space space) const {
  return spaces_[static_cast<int>(space)];
}

size_t BeliefBase::TotalClauses() const {
  size_t n = 0;
  for (const auto& v : spaces_) n += v.size();
  return n;
}

ProofView MakeView(const BeliefBase& base, ViewMode mode,
                   const std::string& other_agent,
                   const std::vector<Clause>* rules) {
  ProofView v;
  v.base = &base;
  v.rules = rules;
  switch (mode) {
    case ViewMode::kPrivate:
      v.spaces = {Space::kSharedWorld, Space::kDiscourse, Space::kPrivate,
                  Space::kAboutOther};
      return v;
    case ViewMode::kMutualWith:
      if (!other_agent.empty() && other_agent != base.other()) {
        throw std::invalid_argument("unknown view mode: mutual-with '" +
                                    other_agent + "' on base of '" +
                                    base.agent() + "'");
      }
      v.spaces = {Space::kSharedWorld, Space::kDiscourse};
      return v;
  }
  throw std::invalid_argument("unknown view mode");
}

namespace {

const std::vector<std::string>& TimeOrder() {
  static const std::vector<std::string> kOrder = {"past", "present", "future"};
  return kOrder;
}

ProofView SubView(const ProofView& v, std::vector<Space> spaces) {
  ProofView out;
  out.base = v.base;
  out.rules = v.rules;
  out.spaces = std::move(spaces);
  return out;
}

bool SameTerm(const Term& a, const Term& b) { return a == b; }

}  // namespace

Term Prover::RenameApart(const Term& t) const {
  // Caller bumps rename_counter_ once per clause use; every variable in
  // that clause gets the same fresh suffix.
  long n = rename_counter_;
  std::function<Term(const Term&)> walk = [&](const Term& u) -> Term {
    switch (u.kind()) {
      case Term::Kind::kConstant:
        return u;
      case Term::Kind::kVariable:
        return Term::MakeVariable(u.symbol() + "~" + std::to_string(n));
      case Term::Kind::kCompound: {
        std::vector<Term> args;
        args.reserve(u.args().size());
        for (const Term& a : u.args()) args.push_back(walk(a));
        return Term::MakeCompound(u.symbol(), std::move(args));
      }
    }
    return u;
  };
  return walk(t);
}

bool Prover::SolveClauses(const Term& goal, const Substitution& s, int depth,
                          const Frame* frames, const Sink& sink) const {
  auto try_clause = [&](const Clause& c) -> bool {
    if (c.head.IsCompound() != goal.IsCompound()) return true;
    if (c.head.symbol() != goal.symbol()) return true;
    if (c.head.IsCompound() && c.head.arity() != goal.arity()) return true;
    Term head = c.head;
    std::vector<Literal> body = c.body;
    if (!c.body.empty() || !c.head.Ground()) {
      ++rename_counter_;
      head = RenameApart(c.head);
      body.clear();
      for (const Literal& l : c.body)
        body.push_back(Literal{l.positive, RenameApart(l.atom)});
    }
    std::optional<Substitution> u = Unify(goal, head, s);
    if (!u) return true;
    if (body.empty()) return sink(*u);
    return SolveLiterals(body, 0, *u, depth - 1, frames, sink);
  };
  if (view_.base) {
    for (Space sp : view_.spaces) {
      for (const Clause& c : view_.base->clauses(sp)) {
        if (!try_clause(c)) return false;
      }
    }
  }
  if (view_.rules) {
    for (const Clause& c : *view_.rules) {
      if (!try_clause(c)) return false;
    }
  }
  return true;
}

bool Prover::Solve(const Term& goal_in, const Substitution& s, int depth,
                   const Frame* frames, const Sink& sink) const {
  if (depth <= 0) {
    if (trace_) {
      ++trace_->budget_prunes;
      trace_->Note("prune: depth budget exhausted at " + PrintTerm(goal_in));
    }
    return true;
  }
  Term goal = s.Apply(goal_in);
  if (goal.IsVariable()) return true;  // unbound goal: no way to resolve

  // Ground-goal loop cut: a repeated ground goal on the positive call
  // stack cannot contribute new solutions.
  if (goal.Ground()) {
    for (const Frame* f = frames; f; f = f->parent) {
      if (!f->naf && SameTerm(*f->goal, goal)) return true;
    }
  }
  Frame frame{&goal, frames, false};

  if (goal.IsCompound() && goal.symbol() == "before" && goal.arity() == 2) {
    const Term& x = goal.args()[0];
    const Term& y = goal.args()[1];
    // Reflexive: t begins before or at the same time as itself.
    if (std::optional<Substitution> u = Unify(x, y, s)) {
      if (!sink(*u)) return false;
    }
    const auto& order = TimeOrder();
    for (size_t i = 0; i < order.size(); ++i) {
      for (size_t j = i + 1; j < order.size(); ++j) {
        Substitution t = s;
        std::optional<Substitution> u =
            Unify(x, Term::MakeConstant(order[i]), t);
        if (!u) continue;
        u = Unify(y, Term::MakeConstant(order[j]), *u);
        if (!u) continue;
        if (!sink(*u)) return false;
      }
    }
    return SolveClauses(goal, s, depth, &frame, sink);
  }

  if (goal.IsCompound() && goal.symbol() == "believe" && goal.arity() == 2 &&
      view_.base) {
    const Term& agent = goal.args()[0];
    const Term& prop = goal.args()[1];
    if (agent.IsConstant() && agent.symbol() == view_.base->agent()) {
      Prover sub(view_, depth - 1, trace_);
      return sub.Solve(prop, s, depth - 1, &frame, sink);
    }
    if (agent.IsConstant() && agent.symbol() == view_.base->other()) {
      // What the base agent takes the other to believe: the mutual spaces
      // plus the about-other model.
      ProofView ov = SubView(
          view_, {Space::kSharedWorld, Space::kDiscourse, Space::kAboutOther});
      Prover sub(ov, depth - 1, trace_);
      return sub.Solve(prop, s, depth - 1, &frame, sink);
    }
    return true;
  }

  if (goal.IsCompound() && goal.symbol() == "suspect" && goal.arity() == 2 &&
      view_.base) {
    const Term& agent = goal.args()[0];
    const Term& prop = goal.args()[1];
    if (agent.IsConstant() && agent.symbol() == view_.base->agent()) {
      ProofView wv = SubView(view_, {Space::kWeakAboutOther});
      Prover sub(wv, depth - 1, trace_);
      return sub.Solve(prop, s, depth - 1, &frame, sink);
    }
    return true;
  }

  return SolveClauses(goal, s, depth, &frame, sink);
}

bool Prover::SolveLiterals(const std::vector<Literal>& body, size_t idx,
                           const Substitution& s, int depth,
                           const Frame* frames, const Sink& sink) const {
  if (idx == body.size()) return sink(s);
  const Literal& lit = body[idx];
  if (lit.positive) {
    return Solve(lit.atom, s, depth,
                 frames, [&](const Substitution& next) {
                   return SolveLiterals(body, idx + 1, next, depth, frames,
                                        sink);
                 });
  }
  // unless(p): succeeds iff p is not provable with the remaining budget.
  Term atom = s.Apply(lit.atom);
  for (const Frame* f = frames; f; f = f->parent) {
    if (f->naf && SameTerm(*f->goal, atom)) {
      if (trace_) {
        ++trace_->naf_cycles;
        trace_->Note("warning: unless cycle at " + PrintTerm(atom));
      }
      return true;  // fail this branch rather than loop
    }
  }
  Frame frame{&atom, frames, true};
  bool provable = false;
  Solve(atom, s, depth, &frame, [&](const Substitution&) {
    provable = true;
    return false;  // first witness suffices
  });
  if (provable) return true;  // literal fails; keep enumerating elsewhere
  return SolveLiterals(body, idx + 1, s, depth, frames, sink);
}

bool Prover::Provable(const Term& goal, const Substitution& seed) const {
  bool found = false;
  Solve(goal, seed, budget_, nullptr, [&](const Substitution&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<Substitution> Prover::Solutions(const Term& goal,
                                            const Substitution& seed,
                                            size_t limit) const {
  std::set<std::string> vars;
  goal.CollectVariables(&vars);
  for (const auto& [k, v] : seed.bindings()) vars.insert(k);
  std::vector<Substitution> out;
  std::set<Substitution> seen;
  Solve(goal, seed, budget_, nullptr, [&](const Substitution& s) {
    Substitution p = s.ProjectTo(vars);
    if (seen.insert(p).second) out.push_back(std::move(p));
    return out.size() < limit;
  });
  return out;
}

std::vector<Substitution> Prover::SolveBody(const std::vector<Literal>& body,
                                            const Substitution& seed,
                                            size_t limit) const {
  std::set<std::string> vars;
  for (const Literal& l : body) l.atom.CollectVariables(&vars);
  for (const auto& [k, v] : seed.bindings()) vars.insert(k);
  std::vector<Substitution> out;
  std::set<Substitution> seen;
  SolveLiterals(body, 0, seed, budget_, nullptr, [&](const Substitution& s) {
    Substitution p = s.ProjectTo(vars);
    if (seen.insert(p).second) out.push_back(std::move(p));
    return out.size() < limit;
  });
  return out;
}

std::vector<Substitution> Prove(const Term& goal, const ProofView& view,
                                int budget, Trace* trace) {
  return Prover(view, budget, trace).Solutions(goal);
}

}  // namespace replika
