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

#ifndef REPLIKA_TERM_H_
#define REPLIKA_TERM_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "replika/sexpr.hpp"

namespace replika {

// A symbolic term: a constant symbol, a variable (written "?x"), or a
// compound whose functor is always a constant symbol. Terms are immutable
// values; symbols are normalized to lower case by the parser.
class Term {
 public:
  enum class Kind { kConstant, kVariable, kCompound };

  Term() : kind_(Kind::kConstant), symbol_("nil") {}

  static Term MakeConstant(std::string name);
  static Term MakeVariable(std::string name);  // name without the '?'
  static Term MakeCompound(std::string functor, std::vector<Term> args);

  Kind kind() const { return kind_; }
  bool IsConstant() const { return kind_ == Kind::kConstant; }
  bool IsVariable() const { return kind_ == Kind::kVariable; }
  bool IsCompound() const { return kind_ == Kind::kCompound; }

  // Constant name, variable name (no '?'), or compound functor.
  const std::string& symbol() const { return symbol_; }
  const std::vector<Term>& args() const { return args_; }
  int arity() const { return static_cast<int>(args_.size()); }

  bool Ground() const;
  void CollectVariables(std::set<std::string>* out) const;
  bool Contains(const std::string& var) const;

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }
  bool operator<(const Term& o) const;

 private:
  Kind kind_;
  std::string symbol_;
  std::vector<Term> args_;
};

// Idempotent variable binding map: no bound variable occurs in any bound
// term, so applying it twice equals applying it once.
class Substitution {
 public:
  bool empty() const { return bindings_.empty(); }
  size_t size() const { return bindings_.size(); }
  const std::map<std::string, Term>& bindings() const { return bindings_; }

  const Term* Lookup(const std::string& var) const;
  Term Apply(const Term& t) const;

  // Binds var := value after resolving value against the current bindings.
  // Enforces the occurs check; returns false (unchanged) on violation.
  bool Bind(const std::string& var, const Term& value);

  // Restricts the map to the given variables.
  Substitution ProjectTo(const std::set<std::string>& vars) const;

  bool operator==(const Substitution& o) const {
    return bindings_ == o.bindings_;
  }
  bool operator<(const Substitution& o) const {
    return bindings_ < o.bindings_;
  }

 private:
  std::map<std::string, Term> bindings_;
};

// Most general unifier extending `seed`, or nullopt. Functor/arity clashes
// and occurs-check violations are normal failures, not errors.
std::optional<Substitution> Unify(const Term& a, const Term& b,
                                  const Substitution& seed = Substitution());

// Concrete syntax: parenthesized symbolic expressions with ";" comments.
// Throws ParseError with line/column on malformed input.
Term ParseTerm(const std::string& text);
Term TermFromSExpr(const SExpr& form);
std::string PrintTerm(const Term& t);

// (not x) <-> x.
Term Negate(const Term& t);

}  // namespace replika

#endif  // REPLIKA_TERM_H_
