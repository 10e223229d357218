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

#include "replika/defaults.hpp"

namespace replika {

// Antecedents are ordered so that grounding the q-side (the left slot)
// grounds the p-side through knowledge-base facts: hypothesis generation
// enumerates these rules forward, so every variable of the p-pattern must
// be reachable from facts once the q-pattern is fixed.
const char* const kDefaultRuleText = R"rules(
;; ---------- coherence rules ----------

;; obstacle: a failed enabling condition explains a failed action
((plausible (cr-obstacle (not (in-state ?stateq ?tq)) (not (occur ?eventp ?tp))))
 <-
 (state ?stateq)
 (event ?eventp)
 (timeperiod ?tq)
 (timeperiod ?tp)
 (before ?tq ?tp)
 (app-cond ?stateq ?eventp)
 (unless (in-state ?stateq ?tq))
 (unless (occur ?eventp ?tp)))

;; obstacle: a failed enabling condition explains another failed state over
;; the same period, which lets obstacle satellites chain
((plausible (cr-obstacle (not (in-state ?stateq ?t)) (not (in-state ?statep ?t))))
 <-
 (state ?stateq)
 (state ?statep)
 (timeperiod ?t)
 (app-cond ?stateq ?statep)
 (unless (in-state ?stateq ?t))
 (unless (in-state ?statep ?t)))

;; condition: "p, if c" is a plausible condition reading when c is a known
;; plausible condition for p and c itself is still open
((plausible (cr-condition (if ?c ?p) ?p))
 <-
 (plausible-condition ?c ?p)
 (unless ?c)
 (unless (not ?c)))

;; cause: a state that motivates an action is a plausible volitional cause
((plausible (cr-cause (in-state ?stateq ?tq) (occur ?eventp ?tp)))
 <-
 (state ?stateq)
 (event ?eventp)
 (timeperiod ?tq)
 (timeperiod ?tp)
 (before ?tq ?tp)
 (motivates ?stateq ?eventp)
 (unless (not (in-state ?stateq ?tq))))

;; elaboration: q refines p through a shared specialization fact
((plausible (cr-elaboration (occur ?eventq ?t) (occur ?eventp ?t)))
 <-
 (event ?eventq)
 (event ?eventp)
 (timeperiod ?t)
 (specializes ?eventq ?eventp))

((plausible (cr-elaboration (in-state ?stateq ?t) (in-state ?statep ?t)))
 <-
 (state ?stateq)
 (state ?statep)
 (timeperiod ?t)
 (specializes ?stateq ?statep))

;; otherwise: q describes what follows if p stays false
((plausible (cr-otherwise (occur ?eventq ?tq) (not (occur ?eventp ?tp))))
 <-
 (event ?eventq)
 (event ?eventp)
 (timeperiod ?tp)
 (timeperiod ?tq)
 (before ?tp ?tq)
 (consequence-of-not ?eventp ?eventq)
 (unless (occur ?eventp ?tp)))

;; contrast: the same event at a strictly later period contrasts with its
;; failure at the asked period
((plausible (cr-contrast (occur ?event ?tq) (not (occur ?event ?tp))))
 <-
 (event ?event)
 (timeperiod ?tp)
 (timeperiod ?tq)
 (before ?tp ?tq)
 (unless (before ?tq ?tp))
 (unless (occur ?event ?tp)))

;; ---------- relation belief bridges ----------
;; An agent believes a coherence relation holds when the agent's own
;; beliefs make it plausible.
((cr-obstacle ?q ?p) <- (plausible (cr-obstacle ?q ?p)))
((cr-condition ?q ?p) <- (plausible (cr-condition ?q ?p)))
((cr-cause ?q ?p) <- (plausible (cr-cause ?q ?p)))
((cr-elaboration ?q ?p) <- (plausible (cr-elaboration ?q ?p)))
((cr-otherwise ?q ?p) <- (plausible (cr-otherwise ?q ?p)))
((cr-contrast ?q ?p) <- (plausible (cr-contrast ?q ?p)))

;; ---------- stimulus conditions ----------
;; Triggers that motivate including a satellite. Evaluated against the
;; speaker's private view; suspect/2 reaches the weak belief space.
((explanation-indicated ?s ?h ?p ?q) <- (suspect ?s (surprised ?h ?q)))
((excuse-indicated ?s ?h ?p ?q) <- (suspect ?s (prerequisite-question ?p)))
((followup-anticipated ?s ?h ?p ?q) <- (suspect ?s (will-ask-why ?h ?p)))
)rules";

// The operator DSL mirrors the tabular layout of the rule cards: a header
// form, then labeled sections. `s` and `h` are reserved parameter symbols
// for speaker and hearer.
//
// The knowif guards keep the five answer types mutually discriminable
// during recognition: yes/no answers are inappropriate when it is mutually
// believed the speaker cannot know whether ?p, and maybe/maybe-not answers
// are inappropriate when it is mutually believed the speaker does know.
const char* const kDefaultOperatorText = R"ops(
(answer-yes s h ?p):
applicability conditions:
  (discourse-expectation (informif s h ?p))
  (unless (not (knowif s ?p)))
  (believe s ?p)
nucleus:
  (inform s h ?p)
satellites:
  (use-condition s h ?p)
  (use-cause s h ?p)
  (use-elaboration s h ?p)
primary goals:
  (bmb h s ?p)

(answer-no s h ?p):
applicability conditions:
  (discourse-expectation (informif s h ?p))
  (unless (not (knowif s ?p)))
  (believe s (not ?p))
nucleus:
  (inform s h (not ?p))
satellites:
  (use-otherwise s h (not ?p))
  (use-obstacle s h (not ?p))
  (use-contrast s h (not ?p))
primary goals:
  (bmb h s (not ?p))

(answer-hedged s h ?p):
applicability conditions:
  (discourse-expectation (informif s h ?p))
  (believe s (some-truth ?p))
nucleus:
  (inform s h (some-truth ?p))
satellites:
  (use-contrast s h ?p)
  (use-elaboration s h ?p)
primary goals:
  (bmb h s (some-truth ?p))

(answer-maybe s h ?p):
applicability conditions:
  (discourse-expectation (informif s h ?p))
  (unless (knowif s ?p))
  (suspect s ?p)
nucleus:
  (inform s h (suspect s ?p))
satellites:
  (use-condition s h ?p)
  (use-elaboration s h ?p)
primary goals:
  (bmb h s (suspect s ?p))

(answer-maybenot s h ?p):
applicability conditions:
  (discourse-expectation (informif s h ?p))
  (unless (knowif s ?p))
  (suspect s (not ?p))
nucleus:
  (inform s h (suspect s (not ?p)))
satellites:
  (use-obstacle s h (not ?p))
  (use-contrast s h (not ?p))
primary goals:
  (bmb h s (suspect s (not ?p)))

(use-obstacle s h ?p):
;; s tells h of an obstacle explaining the failure ?p
existential variable: ?q
applicability conditions:
  (believe s (cr-obstacle ?q ?p))
  (plausible (cr-obstacle ?q ?p))
stimulus conditions:
  (explanation-indicated s h ?p ?q)
  (excuse-indicated s h ?p ?q)
  (followup-anticipated s h ?p ?q)
nucleus:
  (inform s h ?q)
satellites:
  (use-elaboration s h ?q)
  (use-obstacle s h ?q)
  (use-cause s h ?q)
primary goals:
  (bmb h s (cr-obstacle ?q ?p))

(use-condition s h ?p):
;; s tells h of a condition on which ?p depends
existential variable: ?q
applicability conditions:
  (believe s (cr-condition ?q ?p))
  (plausible (cr-condition ?q ?p))
stimulus conditions:
  (explanation-indicated s h ?p ?q)
  (excuse-indicated s h ?p ?q)
  (followup-anticipated s h ?p ?q)
nucleus:
  (inform s h ?q)
satellites:
  (use-elaboration s h ?q)
  (use-obstacle s h ?q)
  (use-cause s h ?q)
primary goals:
  (bmb h s (cr-condition ?q ?p))

(use-cause s h ?p):
;; s tells h what motivates ?p
existential variable: ?q
applicability conditions:
  (believe s (cr-cause ?q ?p))
  (plausible (cr-cause ?q ?p))
stimulus conditions:
  (explanation-indicated s h ?p ?q)
  (excuse-indicated s h ?p ?q)
  (followup-anticipated s h ?p ?q)
nucleus:
  (inform s h ?q)
satellites:
  (use-elaboration s h ?q)
  (use-obstacle s h ?q)
  (use-cause s h ?q)
primary goals:
  (bmb h s (cr-cause ?q ?p))

(use-elaboration s h ?p):
;; s refines ?p
existential variable: ?q
applicability conditions:
  (believe s (cr-elaboration ?q ?p))
  (plausible (cr-elaboration ?q ?p))
stimulus conditions:
  (explanation-indicated s h ?p ?q)
  (excuse-indicated s h ?p ?q)
  (followup-anticipated s h ?p ?q)
nucleus:
  (inform s h ?q)
satellites:
  (use-elaboration s h ?q)
  (use-obstacle s h ?q)
  (use-cause s h ?q)
primary goals:
  (bmb h s (cr-elaboration ?q ?p))

(use-otherwise s h ?p):
;; s tells h a consequence of ?p staying unmet
existential variable: ?q
applicability conditions:
  (believe s (cr-otherwise ?q ?p))
  (plausible (cr-otherwise ?q ?p))
stimulus conditions:
  (explanation-indicated s h ?p ?q)
  (excuse-indicated s h ?p ?q)
  (followup-anticipated s h ?p ?q)
nucleus:
  (inform s h ?q)
satellites:
  (use-elaboration s h ?q)
  (use-obstacle s h ?q)
  (use-cause s h ?q)
primary goals:
  (bmb h s (cr-otherwise ?q ?p))

(use-contrast s h ?p):
;; s affirms an alternative that contrasts with ?p
existential variable: ?q
applicability conditions:
  (believe s (cr-contrast ?q ?p))
  (plausible (cr-contrast ?q ?p))
stimulus conditions:
  (explanation-indicated s h ?p ?q)
  (excuse-indicated s h ?p ?q)
  (followup-anticipated s h ?p ?q)
nucleus:
  (inform s h ?q)
satellites:
  (use-elaboration s h ?q)
  (use-obstacle s h ?q)
  (use-cause s h ?q)
primary goals:
  (bmb h s (cr-contrast ?q ?p))
)ops";

}  // namespace replika
