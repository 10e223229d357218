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

#ifndef REPLIKA_DEFAULTS_H_
#define REPLIKA_DEFAULTS_H_

namespace replika {

// Builtin pragmatic data, all overridable from scenario files: coherence
// rules, relation-belief bridges, stimulus-condition rules, and the
// discourse plan operator library.
extern const char* const kDefaultRuleText;
extern const char* const kDefaultOperatorText;

}  // namespace replika

#endif  // REPLIKA_DEFAULTS_H_
