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

#include "replika/term.hpp"

#include <utility>

namespace replika {

Term Term::MakeConstant(std::string name) {
  Term t;
  t.kind_ = Kind::kConstant;
  t.symbol_ = std::move(name);
  return t;
}

Term Term::MakeVariable(std::string name) {
  Term t;
  t.kind_ = Kind::kVariable;
  t.symbol_ = std::move(name);
  return t;
}

Term Term::MakeCompound(std::string functor, std::vector<Term> args) {
  Term t;
  t.kind_ = Kind::kCompound;
  t.symbol_ = std::move(functor);
  t.args_ = std::move(args);
  return t;
}

bool Term::Ground() const {
  if (IsVariable()) return false;
  for (const Term& a : args_) {
    if (!a.Ground()) return false;
  }
  return true;
}

void Term::CollectVariables(std::set<std::string>* out) const {
  if (IsVariable()) {
    out->insert(symbol_);
    return;
  }
  for (const Term& a : args_) a.CollectVariables(out);
}

bool Term::Contains(const std::string& var) const {
  if (IsVariable()) return symbol_ == var;
  for (const Term& a : args_) {
    if (a.Contains(var)) return true;
  }
  return false;
}

bool Term::operator==(const Term& o) const {
  return kind_ == o.kind_ && symbol_ == o.symbol_ && args_ == o.args_;
}

bool Term::operator<(const Term& o) const {
  if (kind_ != o.kind_) return kind_ < o.kind_;
  if (symbol_ != o.symbol_) return symbol_ < o.symbol_;
  return args_ < o.args_;
}

const Term* Substitution::Lookup(const std::string& var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? nullptr : &it->second;
}

Term Substitution::Apply(const Term& t) const {
  switch (t.kind()) {
    case Term::Kind::kConstant:
      return t;
    case Term::Kind::kVariable: {
      const Term* bound = Lookup(t.symbol());
      return bound ? *bound : t;  // idempotent map: one lookup suffices
    }
    case Term::Kind::kCompound: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(Apply(a));
      return Term::MakeCompound(t.symbol(), std::move(args));
    }
  }
  return t;
}

namespace {

// Replaces every occurrence of `var` in `t` by `value`.
Term SubstOne(const Term& t, const std::string& var, const Term& value) {
  switch (t.kind()) {
    case Term::Kind::kConstant:
      return t;
    case Term::Kind::kVariable:
      return t.symbol() == var ? value : t;
    case Term::Kind::kCompound: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(SubstOne(a, var, value));
      return Term::MakeCompound(t.symbol(), std::move(args));
    }
  }
  return t;
}

}  // namespace

bool Substitution::Bind(const std::string& var, const Term& value) {
  Term resolved = Apply(value);
  if (resolved.IsVariable() && resolved.symbol() == var) return true;
  if (resolved.Contains(var)) return false;  // occurs check
  for (auto& [k, v] : bindings_) v = SubstOne(v, var, resolved);
  bindings_[var] = std::move(resolved);
  return true;
}

Substitution Substitution::ProjectTo(const std::set<std::string>& vars) const {
  Substitution out;
  for (const auto& [k, v] : bindings_) {
    if (vars.count(k)) out.bindings_[k] = v;
  }
  return out;
}

std::optional<Substitution> Unify(const Term& a, const Term& b,
                                  const Substitution& seed) {
  Substitution s = seed;
  Term x = s.Apply(a);
  Term y = s.Apply(b);
  if (x.IsVariable()) {
    if (y.IsVariable() && y.symbol() == x.symbol()) return s;
    if (!s.Bind(x.symbol(), y)) return std::nullopt;
    return s;
  }
  if (y.IsVariable()) {
    if (!s.Bind(y.symbol(), x)) return std::nullopt;
    return s;
  }
  if (x.IsConstant() && y.IsConstant()) {
    if (x.symbol() == y.symbol()) return s;
    return std::nullopt;
  }
  if (x.IsCompound() && y.IsCompound()) {
    if (x.symbol() != y.symbol() || x.arity() != y.arity())
      return std::nullopt;
    for (int i = 0; i < x.arity(); ++i) {
      std::optional<Substitution> next = Unify(x.args()[i], y.args()[i], s);
      if (!next) return std::nullopt;
      s = std::move(*next);
    }
    return s;
  }
  return std::nullopt;
}

Term TermFromSExpr(const SExpr& form) {
  if (form.IsString())
    throw ParseError("string not allowed inside a term", form.pos);
  if (form.IsAtom()) {
    if (form.text.empty()) throw ParseError("empty symbol", form.pos);
    if (form.text[0] == '?') {
      if (form.text.size() == 1)
        throw ParseError("bare '?' is not a variable name", form.pos);
      return Term::MakeVariable(form.text.substr(1));
    }
    return Term::MakeConstant(form.text);
  }
  if (form.items.empty())
    throw ParseError("empty operator position", form.pos);
  const SExpr& head = form.items[0];
  if (!head.IsAtom() || head.text.empty() || head.text[0] == '?')
    throw ParseError("compound functor must be a constant symbol", head.pos);
  std::vector<Term> args;
  args.reserve(form.items.size() - 1);
  for (size_t i = 1; i < form.items.size(); ++i)
    args.push_back(TermFromSExpr(form.items[i]));
  return Term::MakeCompound(head.text, std::move(args));
}

Term ParseTerm(const std::string& text) { return TermFromSExpr(ReadForm(text)); }

std::string PrintTerm(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kConstant:
      return t.symbol();
    case Term::Kind::kVariable:
      return "?" + t.symbol();
    case Term::Kind::kCompound: {
      std::string out = "(" + t.symbol();
      for (const Term& a : t.args()) {
        out += ' ';
        out += PrintTerm(a);
      }
      out += ')';
      return out;
    }
  }
  return t.symbol();
}

Term Negate(const Term& t) {
  if (t.IsCompound() && t.symbol() == "not" && t.arity() == 1)
    return t.args()[0];
  return Term::MakeCompound("not", {t});
}

}  // namespace replika
