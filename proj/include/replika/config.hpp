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

#ifndef REPLIKA_CONFIG_H_
#define REPLIKA_CONFIG_H_

#include <stdexcept>

namespace replika {

// Engine knobs. All depths are at least 1.
struct RunConfig {
  int max_hyp_depth = 3;  // hypothesis-generation search depth
  int proof_depth = 8;    // prover resolution-tree budget
  int plan_depth = 3;     // satellite recursion bound during generation
  bool json = false;      // machine output
  bool trace = false;
  bool experimental_ordering = false;  // satellite-order ranking criterion
  bool multi_satellite = false;  // allow several bindings per satellite slot
  bool allow_empty = false;      // interpret an empty turn

  void Check() const {
    if (max_hyp_depth < 1 || proof_depth < 1 || plan_depth < 1)
      throw std::invalid_argument("all depths must be >= 1");
  }
};

}  // namespace replika

#endif  // REPLIKA_CONFIG_H_
