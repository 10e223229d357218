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
//
// Test-only oracle: random stratified ground programs and their
// forward-chaining fixpoint, built independently of the backward prover.

#ifndef REPLIKA_TESTS_KB_ORACLE_H_
#define REPLIKA_TESTS_KB_ORACLE_H_

#include <random>
#include <set>
#include <vector>

#include "replika/kb.hpp"

namespace replika::testing {

struct GroundProgram {
  std::vector<Clause> clauses;
  std::vector<Term> atom_pool;      // every atom mentioned anywhere
  std::vector<int> pred_stratum;    // stratum per predicate index
  int num_preds = 0;
};

// Ground clauses over unary predicates p0..p{n-1} and a handful of
// constants. Strata make negation well-founded: a clause head's predicate
// sits at or above every positive body predicate and strictly above every
// negated one.
inline GroundProgram RandomStratifiedProgram(std::mt19937& rng,
                                             int max_clauses = 30) {
  std::uniform_int_distribution<int> npreds_d(3, 6);
  std::uniform_int_distribution<int> nconsts_d(2, 6);
  GroundProgram prog;
  prog.num_preds = npreds_d(rng);
  int nconsts = nconsts_d(rng);
  std::uniform_int_distribution<int> stratum_d(0, 2);
  for (int i = 0; i < prog.num_preds; ++i)
    prog.pred_stratum.push_back(stratum_d(rng));

  auto atom = [&](int pred, int c) {
    return Term::MakeCompound(
        "p" + std::to_string(pred),
        {Term::MakeConstant(std::string(1, static_cast<char>('a' + c)))});
  };
  std::uniform_int_distribution<int> pred_d(0, prog.num_preds - 1);
  std::uniform_int_distribution<int> const_d(0, nconsts - 1);
  std::uniform_int_distribution<int> nclauses_d(5, max_clauses);
  std::uniform_int_distribution<int> nbody_d(0, 3);
  std::uniform_int_distribution<int> coin(0, 3);

  std::set<Term> mentioned;
  int n = nclauses_d(rng);
  for (int i = 0; i < n; ++i) {
    int hp = pred_d(rng);
    Clause c;
    c.head = atom(hp, const_d(rng));
    mentioned.insert(c.head);
    int nb = nbody_d(rng);
    for (int b = 0; b < nb; ++b) {
      int bp = pred_d(rng);
      bool negate = coin(rng) == 0 &&
                    prog.pred_stratum[bp] < prog.pred_stratum[hp];
      if (!negate && prog.pred_stratum[bp] > prog.pred_stratum[hp]) {
        bp = hp;  // keep positive deps at or below the head's stratum
      }
      Term a = atom(bp, const_d(rng));
      mentioned.insert(a);
      c.body.push_back(Literal{!negate, a});
    }
    prog.clauses.push_back(std::move(c));
  }
  prog.atom_pool.assign(mentioned.begin(), mentioned.end());
  return prog;
}

// Stratum-by-stratum saturation. Negated literals always refer to a
// strictly lower stratum, whose extension is final by then.
inline std::set<Term> ForwardFixpoint(const GroundProgram& prog) {
  std::set<Term> derived;
  auto stratum_of = [&](const Term& a) {
    return prog.pred_stratum[std::stoi(a.symbol().substr(1))];
  };
  for (int s = 0; s <= 2; ++s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Clause& c : prog.clauses) {
        if (stratum_of(c.head) != s || derived.count(c.head)) continue;
        bool fires = true;
        for (const Literal& l : c.body) {
          bool in = derived.count(l.atom) > 0;
          if (l.positive != in) {
            fires = false;
            break;
          }
        }
        if (fires) {
          derived.insert(c.head);
          changed = true;
        }
      }
    }
  }
  return derived;
}

}  // namespace replika::testing

#endif  // REPLIKA_TESTS_KB_ORACLE_H_
