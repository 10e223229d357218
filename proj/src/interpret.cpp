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

#include "replika/interpret.hpp"

#include <algorithm>
#include <functional>

namespace replika {
namespace {

std::string SatOpNameFor(Relation r) {
  // "cr-obstacle" -> "use-obstacle"
  return "use-" + std::string(RelationName(r)).substr(3);
}

// Everything the recursive matcher needs. The allowed relation set comes
// from the top-level answer type and constrains hypothesis generation all
// the way down.
struct MatchCtx {
  const DiscourseExpectation* exp;
  const std::vector<Utterance>* turn;
  const BeliefBase* q_base;
  const Engine* engine;
  ProofView qpriv;
  ProofView qmutual;
  std::set<Relation> allowed;
  std::vector<Term> turn_props;
};

// A child of a plan node under construction.
struct ChildAcc {
  bool is_nucleus = false;
  InformLeaf leaf;
  PlanNode node;
};

PlanNode AssembleNode(const OperatorInstance& inst,
                      const std::vector<ChildAcc>& children) {
  PlanNode out;
  out.op_name = inst.op->name;
  out.answer_type = inst.op->answer_type;
  out.header = inst.bindings.Apply(Term::MakeVariable("p"));
  if (!inst.op->existential_vars.empty()) {
    Term q = inst.bindings.Apply(
        Term::MakeVariable(inst.op->existential_vars.front()));
    if (q.Ground()) out.existential = q;
  }
  for (const ChildAcc& c : children) {
    if (c.is_nucleus) {
      out.nucleus = c.leaf;
      out.order.push_back(-1);
    } else {
      out.order.push_back(static_cast<int>(out.satellites.size()));
      out.satellites.push_back(c.node);
    }
  }
  return out;
}

std::vector<PlanNode> ParseNodeBound(const OperatorInstance& inst, int lo,
                                     int hi, MatchCtx* ctx);

// All satellite subtrees realizing `ref` of `parent` over block [lo, hi).
std::vector<PlanNode> ParseSatellite(const SatelliteRef& ref,
                                     const OperatorInstance& parent, int lo,
                                     int hi, MatchCtx* ctx) {
  std::vector<PlanNode> results;
  const PlanOperator* sat_op = ctx->engine->ops->Find(ref.name);
  if (sat_op == nullptr || sat_op->top_level) return results;
  Term prop = parent.bindings.Apply(ref.prop_pattern);
  if (!prop.Ground()) return results;
  const std::string speaker = ctx->exp->speaker;
  const std::string hearer = ctx->exp->hearer;
  OperatorInstance base = Instantiate(*sat_op, speaker, hearer, prop);
  if (sat_op->existential_vars.empty()) {
    if (CheckConsistency(base, *ctx->exp, *ctx->q_base, *ctx->engine))
      for (PlanNode& n : ParseNodeBound(base, lo, hi, ctx))
        results.push_back(std::move(n));
    return results;
  }
  const std::string& qvar = sat_op->existential_vars.front();

  // First try to instantiate the existential with a proposition from the
  // response itself.
  std::set<Term> tried;
  for (int i = lo; i < hi; ++i) {
    const Term& cand = (*ctx->turn)[i].prop;
    if (!tried.insert(cand).second) continue;
    OperatorInstance inst = base;
    inst.bindings.Bind(qvar, cand);
    if (!CheckConsistency(inst, *ctx->exp, *ctx->q_base, *ctx->engine))
      continue;
    for (PlanNode& n : ParseNodeBound(inst, lo, hi, ctx))
      results.push_back(std::move(n));
  }

  // Otherwise search for a hypothesized instantiation: a chain of
  // coherence-related propositions from the block's first utterance up to
  // one satisfying the pending plausibility condition. Every chain node
  // becomes hypothesized plan content.
  if (!sat_op->relation) return results;
  std::vector<HypChain> chains = GenerateHypotheses(
      (*ctx->turn)[lo].prop, *sat_op->relation, prop, ctx->allowed,
      ctx->qmutual, ctx->engine->cfg.max_hyp_depth, ctx->turn_props,
      ctx->engine->cfg.proof_depth, ctx->engine->trace);
  for (const HypChain& chain : chains) {
    if (chain.steps.empty()) continue;  // covered by the direct route
    // props[0] = uttered start, props[k] = chain.steps[k-1].prop.
    std::vector<Term> props;
    props.push_back((*ctx->turn)[lo].prop);
    for (const HypChain::Step& st : chain.steps) props.push_back(st.prop);
    int m = static_cast<int>(chain.steps.size());

    // Walk down from the goal, stacking one satellite spine node per
    // chain edge; the innermost node realizes the block itself.
    std::function<std::vector<PlanNode>(const OperatorInstance&, int)> build =
        [&](const OperatorInstance& inst, int k) -> std::vector<PlanNode> {
      std::vector<PlanNode> out;
      if (!CheckConsistency(inst, *ctx->exp, *ctx->q_base, *ctx->engine))
        return out;
      if (k == 0) return ParseNodeBound(inst, lo, hi, ctx);
      // inst's existential is props[k]; hang the use-<rel_k> satellite
      // explaining it, whose existential is props[k-1].
      Relation edge_rel = chain.steps[k - 1].rel;
      const SatelliteRef* next_ref = nullptr;
      for (const SatelliteRef& r : inst.op->satellites) {
        if (r.name == SatOpNameFor(edge_rel)) {
          next_ref = &r;
          break;
        }
      }
      if (next_ref == nullptr) return out;
      const PlanOperator* next_op = ctx->engine->ops->Find(next_ref->name);
      if (next_op == nullptr || next_op->existential_vars.empty()) return out;
      Term next_prop = inst.bindings.Apply(next_ref->prop_pattern);
      if (next_prop != props[k]) return out;
      OperatorInstance next =
          Instantiate(*next_op, speaker, hearer, next_prop);
      next.bindings.Bind(next_op->existential_vars.front(), props[k - 1]);
      for (PlanNode& sub : build(next, k - 1)) {
        InformLeaf nuc;
        nuc.prop = props[k];
        nuc.hypothesized = true;
        std::vector<ChildAcc> children;
        children.push_back(ChildAcc{true, nuc, {}});
        ChildAcc satc;
        satc.is_nucleus = false;
        satc.node = std::move(sub);
        children.push_back(std::move(satc));
        out.push_back(AssembleNode(inst, children));
      }
      return out;
    };

    OperatorInstance top = base;
    top.bindings.Bind(qvar, props[m]);
    for (PlanNode& n : build(top, m)) results.push_back(std::move(n));
  }
  return results;
}

// Enumerates coverings of [pos, hi) as consecutive blocks: one optional
// single-utterance nucleus block plus satellite blocks. The non-
// interleaving constraint holds by construction, since sibling subtrees
// occupy consecutive disjoint index intervals.
void CoverBlocks(const OperatorInstance& inst, const Term& nucleus_prop,
                 int pos, int hi, bool nucleus_done,
                 std::vector<ChildAcc>* acc, MatchCtx* ctx,
                 std::vector<PlanNode>* out) {
  if (pos == hi) {
    std::vector<ChildAcc> children = *acc;
    if (!nucleus_done) {
      // A hypothesized nucleus realizes at its listed position: first.
      InformLeaf nuc;
      nuc.prop = nucleus_prop;
      nuc.hypothesized = true;
      ChildAcc c;
      c.is_nucleus = true;
      c.leaf = nuc;
      children.insert(children.begin(), c);
    }
    out->push_back(AssembleNode(inst, children));
    return;
  }
  if (!nucleus_done && (*ctx->turn)[pos].prop == nucleus_prop) {
    InformLeaf nuc;
    nuc.prop = nucleus_prop;
    nuc.utterance_index = (*ctx->turn)[pos].index;
    ChildAcc c;
    c.is_nucleus = true;
    c.leaf = nuc;
    acc->push_back(c);
    CoverBlocks(inst, nucleus_prop, pos + 1, hi, true, acc, ctx, out);
    acc->pop_back();
  }
  for (int end = pos + 1; end <= hi; ++end) {
    for (const SatelliteRef& ref : inst.op->satellites) {
      for (PlanNode& sub : ParseSatellite(ref, inst, pos, end, ctx)) {
        ChildAcc c;
        c.is_nucleus = false;
        c.node = std::move(sub);
        acc->push_back(std::move(c));
        CoverBlocks(inst, nucleus_prop, end, hi, nucleus_done, acc, ctx, out);
        acc->pop_back();
      }
    }
  }
}

std::vector<PlanNode> ParseNodeBound(const OperatorInstance& inst, int lo,
                                     int hi, MatchCtx* ctx) {
  std::vector<PlanNode> out;
  Term nucleus = inst.Nucleus();
  if (!nucleus.Ground()) return out;
  std::vector<ChildAcc> acc;
  CoverBlocks(inst, nucleus, lo, hi, false, &acc, ctx, &out);
  return out;
}

MatchCtx MakeCtx(const DiscourseExpectation& exp,
                 const std::vector<Utterance>& turn,
                 const BeliefBase& q_base, const Engine& engine,
                 const PlanOperator& top) {
  MatchCtx ctx;
  ctx.exp = &exp;
  ctx.turn = &turn;
  ctx.q_base = &q_base;
  ctx.engine = &engine;
  ctx.qpriv = MakeView(q_base, ViewMode::kPrivate, "", &engine.rules->clauses());
  ctx.qmutual =
      MakeView(q_base, ViewMode::kMutualWith, "", &engine.rules->clauses());
  ctx.allowed = engine.ops->RelationsFor(top);
  for (const Utterance& u : turn) ctx.turn_props.push_back(u.prop);
  return ctx;
}

}  // namespace

std::vector<HypChain> GenerateHypotheses(const Term& p0, Relation pending_rel,
                                         const Term& pending_p,
                                         const std::set<Relation>& allowed,
                                         const ProofView& qmutual,
                                         int max_depth,
                                         const std::vector<Term>& excluded,
                                         int budget, Trace* trace) {
  std::vector<HypChain> goals;
  auto is_goal = [&](const Term& node) {
    return Plausible(pending_rel, node, pending_p, qmutual, budget, trace);
  };
  if (is_goal(p0)) goals.push_back(HypChain{});  // zero-length chain

  std::vector<HypChain> frontier;
  frontier.push_back(HypChain{});
  for (int depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
    std::vector<HypChain> next;
    for (const HypChain& path : frontier) {
      const Term& last = path.steps.empty() ? p0 : path.steps.back().prop;
      for (const auto& [rel, prop] :
           RelatedAntecedents(last, allowed, qmutual, budget, trace)) {
        if (prop == p0) continue;
        bool dup = false;
        for (const HypChain::Step& st : path.steps) {
          if (st.prop == prop) dup = true;
        }
        for (const Term& t : excluded) {
          if (t == prop) dup = true;
        }
        if (dup) continue;
        HypChain extended = path;
        extended.steps.push_back(HypChain::Step{rel, prop});
        if (is_goal(prop)) {
          goals.push_back(extended);  // stop at goal nodes
        } else {
          next.push_back(std::move(extended));
        }
      }
    }
    frontier = std::move(next);
  }
  return goals;
}

bool CheckConsistency(const OperatorInstance& inst,
                      const DiscourseExpectation& exp,
                      const BeliefBase& q_base, const Engine& engine) {
  ProofView qpriv =
      MakeView(q_base, ViewMode::kPrivate, "", &engine.rules->clauses());
  ProofView qmutual =
      MakeView(q_base, ViewMode::kMutualWith, "", &engine.rules->clauses());
  Prover priv(qpriv, engine.cfg.proof_depth, engine.trace);
  Prover mutual(qmutual, engine.cfg.proof_depth, engine.trace);
  const std::string& responder = exp.speaker;

  auto refuted = [&](const Term& claim) {
    Term c = claim;
    if (c.IsCompound() && c.arity() == 2 &&
        (c.symbol() == "believe" || c.symbol() == "suspect") &&
        c.args()[0].IsConstant() && c.args()[0].symbol() == responder) {
      c = c.args()[1];
    } else if (c.IsCompound() && c.symbol() == "bmb" && c.arity() == 3) {
      c = c.args()[2];
    }
    if (priv.Provable(Negate(c))) return true;
    Term other_believes = Term::MakeCompound(
        "believe", {Term::MakeConstant(responder), Negate(c)});
    return priv.Provable(other_believes);
  };

  auto consistent_literal = [&](const Literal& lit) {
    if (!lit.positive) {
      // unless(g) is violated only when g is mutually believed.
      return !mutual.Provable(lit.atom);
    }
    const Term& a = lit.atom;
    if (a.IsCompound() && a.symbol() == "discourse-expectation" &&
        a.arity() == 1) {
      return Unify(a.args()[0], exp.Informif()).has_value();
    }
    if (a.IsCompound() && a.symbol() == "plausible") {
      return mutual.Provable(a);
    }
    return !refuted(a);
  };

  for (const Literal& lit : inst.Applicability()) {
    if (!consistent_literal(lit)) return false;
  }
  for (const Term& goal : inst.Goals()) {
    if (refuted(goal)) return false;
  }
  return true;
}

std::vector<PlanTree> MatchSpan(const OperatorInstance& inst,
                                const DiscourseExpectation& exp,
                                const std::vector<Utterance>& turn, int lo,
                                int hi, const BeliefBase& q_base,
                                const Engine& engine) {
  MatchCtx ctx = MakeCtx(exp, turn, q_base, engine, *inst.op);
  std::vector<PlanTree> out;
  for (PlanNode& n : ParseNodeBound(inst, lo, hi, &ctx))
    out.push_back(PlanTree{std::move(n)});
  return out;
}

std::vector<CandidatePlan> InterpretAnswer(const DiscourseExpectation& exp,
                                           const std::vector<Utterance>& turn,
                                           const BeliefBase& q_base,
                                           const Engine& engine) {
  engine.cfg.Check();
  std::vector<CandidatePlan> cands;
  std::set<std::string> seen;
  for (const PlanOperator* op : engine.ops->TopLevel()) {
    OperatorInstance inst =
        Instantiate(*op, exp.speaker, exp.hearer, exp.prop);
    if (!CheckConsistency(inst, exp, q_base, engine)) continue;

    std::vector<PlanTree> trees;
    if (turn.empty()) {
      if (!engine.cfg.allow_empty) continue;
      InformLeaf nuc;
      nuc.prop = inst.Nucleus();
      nuc.hypothesized = true;
      PlanNode root;
      root.op_name = op->name;
      root.answer_type = op->answer_type;
      root.header = exp.prop;
      root.nucleus = nuc;
      root.order = {-1};
      trees.push_back(PlanTree{std::move(root)});
    } else {
      trees = MatchSpan(inst, exp, turn, 0, static_cast<int>(turn.size()),
                        q_base, engine);
    }
    for (PlanTree& t : trees) {
      std::string key = SerializePlan(t);
      if (!seen.insert(key).second) continue;
      CandidatePlan c;
      c.op_name = op->name;
      c.op_index = engine.ops->IndexOf(op->name);
      c.answer_type = op->answer_type;
      c.hypothesized = HypothesizedCount(t);
      c.accounted = ExplicitCount(t);
      c.direct_answer = t.root.nucleus.prop;
      c.tree = std::move(t);
      cands.push_back(std::move(c));
    }
  }
  RankCandidates(&cands);
  return cands;
}

void RankCandidates(std::vector<CandidatePlan>* cands) {
  std::stable_sort(cands->begin(), cands->end(),
                   [](const CandidatePlan& a, const CandidatePlan& b) {
                     if (a.hypothesized != b.hypothesized)
                       return a.hypothesized < b.hypothesized;
                     if (a.accounted != b.accounted)
                       return a.accounted > b.accounted;
                     if (a.op_index != b.op_index)
                       return a.op_index < b.op_index;
                     return SerializePlan(a.tree) < SerializePlan(b.tree);
                   });
}

bool StrictTop(const std::vector<CandidatePlan>& cands) {
  if (cands.empty()) return false;
  const CandidatePlan& top = cands.front();
  for (size_t i = 1; i < cands.size(); ++i) {
    const CandidatePlan& c = cands[i];
    bool dominates = top.hypothesized <= c.hypothesized &&
                     top.accounted >= c.accounted &&
                     (top.hypothesized < c.hypothesized ||
                      top.accounted > c.accounted);
    if (!dominates) return false;
  }
  return true;
}

bool TiedAtTop(const std::vector<CandidatePlan>& cands) {
  return cands.size() > 1 && !StrictTop(cands);
}

}  // namespace replika
