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

#ifndef REPLIKA_TESTS_TEST_UTIL_H_
#define REPLIKA_TESTS_TEST_UTIL_H_

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "replika/scenario.hpp"

namespace replika::testing {

inline std::string FixtureDir() {
  if (const char* env = std::getenv("REPLIKA_FIXTURES")) return env;
  return REPLIKA_FIXTURE_DIR;
}

inline std::string Fixture(const std::string& name) {
  return FixtureDir() + "/" + name;
}

inline Scenario LoadFixture(const std::string& name) {
  return LoadScenario(Fixture(name));
}

// Random ground term over a tiny vocabulary; depth-bounded.
inline Term RandomTerm(std::mt19937& rng, int depth = 3) {
  static const std::vector<std::string> symbols = {"a", "b",  "c",
                                                   "f", "g",  "rel",
                                                   "x", "y1", "thing"};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(symbols.size()) - 1);
  std::uniform_int_distribution<int> kind(0, 5);
  int k = kind(rng);
  if (depth <= 0 || k < 2) return Term::MakeConstant(symbols[pick(rng)]);
  if (k == 2) return Term::MakeVariable(symbols[pick(rng)]);
  std::uniform_int_distribution<int> nargs(1, 3);
  std::vector<Term> args;
  int n = nargs(rng);
  for (int i = 0; i < n; ++i) args.push_back(RandomTerm(rng, depth - 1));
  return Term::MakeCompound(symbols[pick(rng)], std::move(args));
}

// Leaf propositions in frontier order.
inline std::vector<Term> FrontierProps(const PlanTree& tree,
                                       bool explicit_only = false) {
  std::vector<Term> out;
  for (const InformLeaf* leaf : Frontier(tree)) {
    if (!explicit_only || !leaf->hypothesized) out.push_back(leaf->prop);
  }
  return out;
}

// All plan nodes of the tree, preorder.
inline void CollectNodes(const PlanNode& node,
                         std::vector<const PlanNode*>* out) {
  out->push_back(&node);
  for (const PlanNode& sat : node.satellites) CollectNodes(sat, out);
}

// True when some leaf under `node` carries `prop`.
inline bool SubtreeHasLeaf(const PlanNode& node, const Term& prop) {
  if (node.nucleus.prop == prop) return true;
  for (const PlanNode& sat : node.satellites) {
    if (SubtreeHasLeaf(sat, prop)) return true;
  }
  return false;
}

}  // namespace replika::testing

#endif  // REPLIKA_TESTS_TEST_UTIL_H_
