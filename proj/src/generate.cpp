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

#include "replika/generate.hpp"

#include <stdexcept>

namespace replika {
namespace {

struct GenCtx {
  const DiscourseExpectation* exp;
  const Engine* engine;
  ProofView rpriv;
  ProofView rmutual;
};

// Solves a condition list left to right, routing each literal to the view
// its kind is evaluated in: plausibility against the mutual view, beliefs
// and everything else against the private view, negation-as-failure
// against the private view.
std::vector<Substitution> SolveRouted(const std::vector<Literal>& literals,
                                      const Substitution& seed, GenCtx* ctx) {
  std::vector<Substitution> current = {seed};
  Prover priv(ctx->rpriv, ctx->engine->cfg.proof_depth, ctx->engine->trace);
  Prover mutual(ctx->rmutual, ctx->engine->cfg.proof_depth,
                ctx->engine->trace);
  for (const Literal& lit : literals) {
    std::vector<Substitution> next;
    for (const Substitution& s : current) {
      if (!lit.positive) {
        if (!priv.Provable(s.Apply(lit.atom))) next.push_back(s);
        continue;
      }
      Term atom = s.Apply(lit.atom);
      if (atom.IsCompound() && atom.symbol() == "discourse-expectation" &&
          atom.arity() == 1) {
        if (std::optional<Substitution> u =
                Unify(atom.args()[0], ctx->exp->Informif(), s)) {
          next.push_back(*u);
        }
        continue;
      }
      const Prover& prover =
          (atom.IsCompound() && atom.symbol() == "plausible") ? mutual : priv;
      for (Substitution& sol : prover.Solutions(lit.atom, s))
        next.push_back(std::move(sol));
    }
    current = std::move(next);
    if (current.empty()) break;
  }
  return current;
}

void ExpandNode(const OperatorInstance& inst, PlanNode* node, int depth,
                std::set<std::string>* used, GenCtx* ctx,
                const BeliefBase& r_base) {
  node->op_name = inst.op->name;
  node->answer_type = inst.op->answer_type;
  node->header = inst.bindings.Apply(Term::MakeVariable("p"));
  if (!inst.op->existential_vars.empty()) {
    Term q = inst.bindings.Apply(
        Term::MakeVariable(inst.op->existential_vars.front()));
    if (q.Ground()) node->existential = q;
  }
  node->nucleus.prop = inst.Nucleus();
  node->nucleus.hypothesized = false;
  node->order.push_back(-1);  // realization order = listing order

  if (depth >= ctx->engine->cfg.plan_depth) return;
  for (const SatelliteRef& ref : inst.op->satellites) {
    const PlanOperator* sat_op = ctx->engine->ops->Find(ref.name);
    if (sat_op == nullptr || sat_op->top_level) continue;
    Term prop = inst.bindings.Apply(ref.prop_pattern);
    if (!prop.Ground()) continue;
    OperatorInstance base =
        Instantiate(*sat_op, ctx->exp->speaker, ctx->exp->hearer, prop);
    std::vector<Substitution> sols =
        SolveRouted(base.Applicability(), base.bindings, ctx);
    std::set<Term> taken;
    int included = 0;
    for (const Substitution& sol : sols) {
      if (sat_op->existential_vars.empty()) break;
      const std::string& qvar = sat_op->existential_vars.front();
      Term q = sol.Apply(Term::MakeVariable(qvar));
      if (!q.Ground() || !taken.insert(q).second) continue;
      OperatorInstance sat_inst = base;
      sat_inst.bindings.Bind(qvar, q);
      std::string key = sat_op->name + " " + PrintTerm(q);
      if (used->count(key)) continue;

      // The gate: at least one stimulus condition must hold.
      bool stimulated = false;
      for (const Literal& st : sat_inst.Stimulus()) {
        if (st.positive && EvalStimulus(st.atom, r_base, *ctx->engine)) {
          stimulated = true;
          break;
        }
      }
      if (!stimulated) {
        if (ctx->engine->trace)
          ctx->engine->trace->Note("gate closed: " + key);
        continue;
      }
      used->insert(key);
      PlanNode child;
      ExpandNode(sat_inst, &child, depth + 1, used, ctx, r_base);
      node->order.push_back(static_cast<int>(node->satellites.size()));
      node->satellites.push_back(std::move(child));
      ++included;
      if (!ctx->engine->cfg.multi_satellite && included >= 1) break;
    }
  }
}

void ReindexExplicitLeaves(PlanTree* tree) {
  int next = 0;
  for (InformLeaf* leaf : MutableFrontier(tree)) {
    leaf->utterance_index = leaf->hypothesized ? -1 : next++;
  }
}

void CollectGoals(const PlanNode& node, const DiscourseExpectation& exp,
                  const OperatorLibrary& ops, std::vector<Term>* out) {
  if (const PlanOperator* op = ops.Find(node.op_name)) {
    OperatorInstance inst =
        Instantiate(*op, exp.speaker, exp.hearer, node.header);
    if (node.existential && !op->existential_vars.empty())
      inst.bindings.Bind(op->existential_vars.front(), *node.existential);
    for (Term& g : inst.Goals()) out->push_back(std::move(g));
  }
  for (int slot : node.order) {
    if (slot >= 0) CollectGoals(node.satellites[slot], exp, ops, out);
  }
}

}  // namespace

std::optional<OperatorInstance> SelectAnswerType(
    const DiscourseExpectation& exp, const BeliefBase& r_base,
    const Engine& engine) {
  engine.cfg.Check();
  GenCtx ctx{&exp, &engine,
             MakeView(r_base, ViewMode::kPrivate, "", &engine.rules->clauses()),
             MakeView(r_base, ViewMode::kMutualWith, "",
                      &engine.rules->clauses())};
  for (const PlanOperator* op : engine.ops->TopLevel()) {
    OperatorInstance inst =
        Instantiate(*op, exp.speaker, exp.hearer, exp.prop);
    if (!SolveRouted(inst.Applicability(), inst.bindings, &ctx).empty())
      return inst;
  }
  return std::nullopt;
}

bool EvalStimulus(const Term& pred, const BeliefBase& r_base,
                  const Engine& engine) {
  if (!pred.IsCompound() ||
      !engine.rules->stimulus_predicates().count(pred.symbol())) {
    throw std::invalid_argument("unknown stimulus predicate: " +
                                (pred.IsCompound() ? pred.symbol()
                                                   : PrintTerm(pred)));
  }
  ProofView rpriv =
      MakeView(r_base, ViewMode::kPrivate, "", &engine.rules->clauses());
  return Prover(rpriv, engine.cfg.proof_depth, engine.trace).Provable(pred);
}

PlanTree ExpandPlan(const OperatorInstance& inst, const BeliefBase& r_base,
                    const Engine& engine) {
  engine.cfg.Check();
  GenCtx ctx{nullptr, &engine,
             MakeView(r_base, ViewMode::kPrivate, "", &engine.rules->clauses()),
             MakeView(r_base, ViewMode::kMutualWith, "",
                      &engine.rules->clauses())};
  // Recover speaker/hearer from the instance header bindings.
  Term s = inst.bindings.Apply(Term::MakeVariable("s"));
  Term h = inst.bindings.Apply(Term::MakeVariable("h"));
  DiscourseExpectation exp{s.symbol(), h.symbol(),
                           inst.bindings.Apply(Term::MakeVariable("p"))};
  ctx.exp = &exp;
  PlanTree tree;
  std::set<std::string> used;
  ExpandNode(inst, &tree.root, 0, &used, &ctx, r_base);
  ReindexExplicitLeaves(&tree);
  return tree;
}

PlanTree PrunePlan(const PlanTree& full, const BeliefBase& r_model_of_q,
                   const DiscourseExpectation& exp, const Engine& engine) {
  PlanTree pruned = full;
  std::vector<InformLeaf*> leaves = MutableFrontier(&pruned);
  // Right to left over the frontier: a satellite is always considered
  // before its nucleus because realization puts the nucleus first.
  for (auto it = leaves.rbegin(); it != leaves.rend(); ++it) {
    InformLeaf* leaf = *it;
    if (leaf->hypothesized) continue;
    std::vector<Utterance> trial;
    for (InformLeaf* other : leaves) {
      if (other == leaf || other->hypothesized) continue;
      trial.push_back(
          Utterance{static_cast<int>(trial.size()), other->prop});
    }
    if (trial.empty()) {
      if (engine.trace)
        engine.trace->Note("prune: kept " + PrintTerm(leaf->prop) +
                           " (a turn may not become empty)");
      continue;
    }
    std::vector<CandidatePlan> cands =
        InterpretAnswer(exp, trial, r_model_of_q, engine);
    bool prunable = !cands.empty() && StrictTop(cands) &&
                    EqualModuloTags(cands.front().tree, full);
    if (engine.trace) {
      std::string verdict =
          prunable ? "prunable" : (cands.empty() ? "no reading" : "blocked");
      engine.trace->Note("prune trial without " + PrintTerm(leaf->prop) +
                         ": " + verdict);
    }
    if (prunable) {
      leaf->hypothesized = true;
      leaf->utterance_index = -1;
    }
  }
  ReindexExplicitLeaves(&pruned);
  return pruned;
}

std::optional<GenerationResult> GenerateAnswer(const DiscourseExpectation& exp,
                                               const BeliefBase& r_base,
                                               const BeliefBase& r_model_of_q,
                                               const Engine& engine) {
  std::optional<OperatorInstance> inst = SelectAnswerType(exp, r_base, engine);
  if (!inst) return std::nullopt;
  GenerationResult result;
  result.op_name = inst->op->name;
  result.answer_type = inst->op->answer_type;
  result.full = ExpandPlan(*inst, r_base, engine);
  result.pruned = PrunePlan(result.full, r_model_of_q, exp, engine);
  for (const InformLeaf* leaf : Frontier(result.pruned)) {
    if (!leaf->hypothesized) result.utterances.push_back(leaf->prop);
  }
  CollectGoals(result.full.root, exp, *engine.ops, &result.adopted_goals);
  return result;
}

}  // namespace replika
