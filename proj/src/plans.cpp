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

#include "replika/plans.hpp"

#include <cctype>
#include <functional>

#include "replika/defaults.hpp"

namespace replika {
namespace {

// The reserved parameter symbols of the operator DSL. Constants named "s"
// or "h" inside operator forms are rewritten to variables at parse time so
// instantiation is ordinary substitution.
Term RewriteParams(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kConstant:
      if (t.symbol() == "s" || t.symbol() == "h")
        return Term::MakeVariable(t.symbol());
      return t;
    case Term::Kind::kVariable:
      return t;
    case Term::Kind::kCompound: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(RewriteParams(a));
      return Term::MakeCompound(t.symbol(), std::move(args));
    }
  }
  return t;
}

// Tokenizer for the operator DSL: forms, ":" markers, and bare words that
// assemble into section labels.
struct OpToken {
  enum class Kind { kForm, kColon, kWord, kVariable };
  Kind kind;
  SExpr form;        // kForm
  std::string text;  // kWord / kVariable
  SourcePos pos;
};

std::vector<OpToken> LexOperators(const std::string& text) {
  std::vector<OpToken> tokens;
  size_t i = 0;
  int line = 1, col = 1;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      continue;
    }
    if (c == ';') {
      while (i < text.size() && text[i] != '\n') advance(text[i]);
      continue;
    }
    SourcePos here{line, col};
    if (c == ':') {
      tokens.push_back({OpToken::Kind::kColon, {}, ":", here});
      advance(c);
      continue;
    }
    if (c == '(') {
      // Re-read the balanced form through the shared reader.
      int depth = 0;
      size_t start = i;
      while (i < text.size()) {
        char d = text[i];
        if (d == ';') {
          while (i < text.size() && text[i] != '\n') advance(text[i]);
          continue;
        }
        if (d == '(') ++depth;
        if (d == ')') --depth;
        advance(d);
        if (depth == 0) break;
      }
      if (depth != 0) throw ParseError("missing ')'", here);
      OpToken t{OpToken::Kind::kForm, ReadForm(text.substr(start, i - start)),
                "", here};
      t.form.pos = here;
      tokens.push_back(std::move(t));
      continue;
    }
    std::string word;
    while (i < text.size()) {
      char d = text[i];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' ||
          d == ')' || d == ':' || d == ';') {
        break;
      }
      word.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(d))));
      advance(d);
    }
    tokens.push_back({word[0] == '?' ? OpToken::Kind::kVariable
                                     : OpToken::Kind::kWord,
                      {},
                      word,
                      here});
  }
  return tokens;
}

enum class Section {
  kNone,
  kExistential,
  kApplicability,
  kStimulus,
  kNucleus,
  kSatellites,
  kGoals,
};

Section SectionFromLabel(const std::string& label, SourcePos pos) {
  if (label == "existential variable" || label == "existential variables")
    return Section::kExistential;
  if (label == "applicability conditions") return Section::kApplicability;
  if (label == "stimulus conditions") return Section::kStimulus;
  if (label == "nucleus") return Section::kNucleus;
  if (label == "satellites") return Section::kSatellites;
  if (label == "primary goals") return Section::kGoals;
  throw ParseError("unknown operator section '" + label + "'", pos);
}

void ValidateOperator(const PlanOperator& op) {
  auto fail = [&](const std::string& what) {
    throw OperatorError("operator '" + op.name + "': " + what);
  };
  std::set<std::string> allowed = {"s", "h", "p"};
  for (const std::string& v : op.existential_vars) allowed.insert(v);
  auto check_vars = [&](const Term& t, const char* where) {
    std::set<std::string> vars;
    t.CollectVariables(&vars);
    for (const std::string& v : vars) {
      if (!allowed.count(v))
        fail(std::string("unbound variable ?") + v + " in " + where);
    }
  };
  check_vars(op.nucleus_prop, "nucleus");
  for (const SatelliteRef& s : op.satellites)
    check_vars(s.prop_pattern, "satellites");
  for (const Term& g : op.primary_goals) check_vars(g, "primary goals");
  if (op.top_level && !op.stimulus.empty())
    fail("top-level operators take no stimulus conditions");
  if (!op.top_level && op.stimulus.empty())
    fail("satellite operators need at least one stimulus condition");
  if (op.relation) {
    // Exactly one plausibility condition for the operator's own relation,
    // mirrored by a believe-s condition.
    int plausible = 0, believed = 0;
    for (const Literal& l : op.applicability) {
      if (!l.positive) continue;
      const Term& a = l.atom;
      if (a.IsCompound() && a.symbol() == "plausible" && a.arity() == 1 &&
          a.args()[0].IsCompound() &&
          a.args()[0].symbol() == RelationName(*op.relation)) {
        ++plausible;
      }
      if (a.IsCompound() && a.symbol() == "believe" && a.arity() == 2 &&
          a.args()[1].IsCompound() &&
          a.args()[1].symbol() == RelationName(*op.relation)) {
        ++believed;
      }
    }
    if (plausible != 1 || believed != 1)
      fail("needs exactly one plausible condition for its relation and one "
           "believe-s mirror of it");
  }
}

}  // namespace

OperatorLibrary OperatorLibrary::Parse(const std::string& text) {
  OperatorLibrary lib;
  std::vector<OpToken> tokens = LexOperators(text);
  size_t i = 0;
  while (i < tokens.size()) {
    // Operator header: a form followed by ':'.
    if (tokens[i].kind != OpToken::Kind::kForm)
      throw ParseError("expected operator header form", tokens[i].pos);
    const SExpr& header = tokens[i].form;
    if (!header.IsList() || header.items.empty() || !header.items[0].IsAtom())
      throw ParseError("malformed operator header", header.pos);
    if (i + 1 >= tokens.size() || tokens[i + 1].kind != OpToken::Kind::kColon)
      throw ParseError("operator header must be followed by ':'", header.pos);
    i += 2;

    PlanOperator op;
    op.name = header.items[0].text;
    op.answer_type = AnswerTypeFromOperatorName(op.name);
    if (op.name.rfind("use-", 0) == 0)
      op.relation = RelationFromName(op.name);
    bool saw_nucleus = false;

    Section section = Section::kNone;
    while (i < tokens.size()) {
      const OpToken& tok = tokens[i];
      if (tok.kind == OpToken::Kind::kWord) {
        // Collect a label phrase up to the ':'.
        std::string label = tok.text;
        SourcePos pos = tok.pos;
        ++i;
        while (i < tokens.size() && tokens[i].kind == OpToken::Kind::kWord) {
          label += ' ';
          label += tokens[i].text;
          ++i;
        }
        if (i >= tokens.size() || tokens[i].kind != OpToken::Kind::kColon)
          throw ParseError("section label '" + label + "' needs ':'", pos);
        ++i;
        section = SectionFromLabel(label, pos);
        continue;
      }
      if (tok.kind == OpToken::Kind::kVariable) {
        if (section != Section::kExistential)
          throw ParseError("stray variable " + tok.text, tok.pos);
        op.existential_vars.push_back(tok.text.substr(1));
        ++i;
        continue;
      }
      if (tok.kind == OpToken::Kind::kForm) {
        // A form followed by ':' starts the next operator.
        if (i + 1 < tokens.size() &&
            tokens[i + 1].kind == OpToken::Kind::kColon) {
          break;
        }
        Term t = RewriteParams(TermFromSExpr(tok.form));
        switch (section) {
          case Section::kApplicability:
            op.applicability.push_back(LiteralFromTerm(t));
            break;
          case Section::kStimulus:
            op.stimulus.push_back(LiteralFromTerm(t));
            break;
          case Section::kNucleus: {
            if (!t.IsCompound() || t.symbol() != "inform" || t.arity() != 3)
              throw ParseError("nucleus must be (inform s h <prop>)",
                               tok.pos);
            op.nucleus_prop = t.args()[2];
            saw_nucleus = true;
            break;
          }
          case Section::kSatellites: {
            if (!t.IsCompound() || t.arity() != 3)
              throw ParseError("satellite reference must be (<op> s h <prop>)",
                               tok.pos);
            op.satellites.push_back(SatelliteRef{t.symbol(), t.args()[2]});
            break;
          }
          case Section::kGoals:
            op.primary_goals.push_back(t);
            break;
          default:
            throw ParseError("form outside any section", tok.pos);
        }
        ++i;
        continue;
      }
      throw ParseError("unexpected ':'", tok.pos);
    }
    if (!saw_nucleus)
      throw OperatorError("operator '" + op.name + "': missing nucleus");
    op.top_level = op.stimulus.empty();
    ValidateOperator(op);
    lib.ops_.push_back(std::move(op));
  }
  return lib;
}

OperatorLibrary OperatorLibrary::Builtin() {
  return Parse(kDefaultOperatorText);
}

void OperatorLibrary::Merge(const OperatorLibrary& overrides) {
  for (const PlanOperator& incoming : overrides.ops_) {
    bool replaced = false;
    for (PlanOperator& mine : ops_) {
      if (mine.name == incoming.name) {
        mine = incoming;
        replaced = true;
        break;
      }
    }
    if (!replaced) ops_.push_back(incoming);
  }
}

const PlanOperator* OperatorLibrary::Find(const std::string& name) const {
  for (const PlanOperator& op : ops_) {
    if (op.name == name) return &op;
  }
  return nullptr;
}

std::vector<const PlanOperator*> OperatorLibrary::TopLevel() const {
  std::vector<const PlanOperator*> out;
  for (const PlanOperator& op : ops_) {
    if (op.top_level) out.push_back(&op);
  }
  return out;
}

int OperatorLibrary::IndexOf(const std::string& name) const {
  for (size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

std::set<Relation> OperatorLibrary::RelationsFor(AnswerType t) const {
  std::set<Relation> out;
  for (const PlanOperator& op : ops_) {
    if (op.top_level && op.answer_type == t) {
      std::set<Relation> rs = RelationsFor(op);
      out.insert(rs.begin(), rs.end());
    }
  }
  return out;
}

std::set<Relation> OperatorLibrary::RelationsFor(const PlanOperator& op) const {
  std::set<Relation> out;
  for (const SatelliteRef& s : op.satellites) {
    if (const PlanOperator* sat = Find(s.name); sat && sat->relation)
      out.insert(*sat->relation);
  }
  return out;
}

std::vector<Literal> OperatorInstance::Applicability() const {
  std::vector<Literal> out;
  for (const Literal& l : op->applicability)
    out.push_back(Literal{l.positive, bindings.Apply(l.atom)});
  return out;
}

std::vector<Literal> OperatorInstance::Stimulus() const {
  std::vector<Literal> out;
  for (const Literal& l : op->stimulus)
    out.push_back(Literal{l.positive, bindings.Apply(l.atom)});
  return out;
}

std::vector<Term> OperatorInstance::Goals() const {
  std::vector<Term> out;
  for (const Term& g : op->primary_goals) out.push_back(bindings.Apply(g));
  return out;
}

OperatorInstance Instantiate(const PlanOperator& op, const std::string& s,
                             const std::string& h, const Term& p) {
  OperatorInstance inst;
  inst.op = &op;
  inst.bindings.Bind("s", Term::MakeConstant(s));
  inst.bindings.Bind("h", Term::MakeConstant(h));
  inst.bindings.Bind("p", p);
  return inst;
}

bool PlanNode::operator==(const PlanNode& o) const {
  return op_name == o.op_name && header == o.header &&
         existential == o.existential && nucleus == o.nucleus &&
         satellites == o.satellites && order == o.order;
}

namespace {

void WalkLeaves(const PlanNode& node,
                const std::function<void(const InformLeaf&)>& fn) {
  for (int slot : node.order) {
    if (slot < 0) {
      fn(node.nucleus);
    } else {
      WalkLeaves(node.satellites[slot], fn);
    }
  }
}

void WalkLeavesMut(PlanNode* node,
                   const std::function<void(InformLeaf*)>& fn) {
  for (int slot : node->order) {
    if (slot < 0) {
      fn(&node->nucleus);
    } else {
      WalkLeavesMut(&node->satellites[slot], fn);
    }
  }
}

}  // namespace

std::vector<const InformLeaf*> Frontier(const PlanTree& tree) {
  std::vector<const InformLeaf*> out;
  WalkLeaves(tree.root, [&](const InformLeaf& l) { out.push_back(&l); });
  return out;
}

std::vector<InformLeaf*> MutableFrontier(PlanTree* tree) {
  std::vector<InformLeaf*> out;
  WalkLeavesMut(&tree->root, [&](InformLeaf* l) { out.push_back(l); });
  return out;
}

int HypothesizedCount(const PlanTree& tree) {
  int n = 0;
  WalkLeaves(tree.root, [&](const InformLeaf& l) {
    if (l.hypothesized) ++n;
  });
  return n;
}

int ExplicitCount(const PlanTree& tree) {
  int n = 0;
  WalkLeaves(tree.root, [&](const InformLeaf& l) {
    if (!l.hypothesized) ++n;
  });
  return n;
}

namespace {

bool NodesEqualModuloTags(const PlanNode& a, const PlanNode& b) {
  if (a.op_name != b.op_name || a.header != b.header ||
      a.existential != b.existential || a.order != b.order ||
      a.nucleus.prop != b.nucleus.prop ||
      a.satellites.size() != b.satellites.size()) {
    return false;
  }
  for (size_t i = 0; i < a.satellites.size(); ++i) {
    if (!NodesEqualModuloTags(a.satellites[i], b.satellites[i])) return false;
  }
  return true;
}

}  // namespace

bool EqualModuloTags(const PlanTree& a, const PlanTree& b) {
  return NodesEqualModuloTags(a.root, b.root);
}

namespace {

void SerializeNode(const PlanNode& node, std::string* out) {
  *out += "(plan " + node.op_name;
  *out += " (p " + PrintTerm(node.header) + ")";
  if (node.existential) *out += " (q " + PrintTerm(*node.existential) + ")";
  *out += " (children";
  for (int slot : node.order) {
    if (slot < 0) {
      const InformLeaf& l = node.nucleus;
      if (l.hypothesized) {
        *out += " (nucleus " + PrintTerm(l.prop) + " hyp)";
      } else {
        *out += " (nucleus " + PrintTerm(l.prop) + " utt " +
                std::to_string(l.utterance_index) + ")";
      }
    } else {
      *out += " (sat ";
      SerializeNode(node.satellites[slot], out);
      *out += ")";
    }
  }
  *out += "))";
}

PlanNode NodeFromSExpr(const SExpr& form) {
  auto bad = [&](const std::string& what) {
    throw ParseError("plan form: " + what, form.pos);
  };
  if (!form.IsList() || form.items.size() < 3 || !form.items[0].IsAtom() ||
      form.items[0].text != "plan")
    bad("expected (plan <op> ...)");
  PlanNode node;
  node.op_name = form.items[1].text;
  node.answer_type = AnswerTypeFromOperatorName(node.op_name);
  bool saw_nucleus = false;
  for (size_t i = 2; i < form.items.size(); ++i) {
    const SExpr& part = form.items[i];
    if (!part.IsList() || part.items.empty() || !part.items[0].IsAtom())
      bad("malformed plan part");
    const std::string& tag = part.items[0].text;
    if (tag == "p" && part.items.size() == 2) {
      node.header = TermFromSExpr(part.items[1]);
    } else if (tag == "q" && part.items.size() == 2) {
      node.existential = TermFromSExpr(part.items[1]);
    } else if (tag == "children") {
      for (size_t j = 1; j < part.items.size(); ++j) {
        const SExpr& child = part.items[j];
        if (!child.IsList() || child.items.empty() ||
            !child.items[0].IsAtom())
          bad("malformed child");
        if (child.items[0].text == "nucleus") {
          if (child.items.size() < 3) bad("malformed nucleus");
          InformLeaf leaf;
          leaf.prop = TermFromSExpr(child.items[1]);
          if (child.items[2].text == "hyp") {
            leaf.hypothesized = true;
          } else if (child.items[2].text == "utt" &&
                     child.items.size() == 4) {
            leaf.utterance_index = std::stoi(child.items[3].text);
          } else {
            bad("nucleus tag must be 'hyp' or 'utt <i>'");
          }
          node.nucleus = leaf;
          node.order.push_back(-1);
          saw_nucleus = true;
        } else if (child.items[0].text == "sat" && child.items.size() == 2) {
          node.order.push_back(static_cast<int>(node.satellites.size()));
          node.satellites.push_back(NodeFromSExpr(child.items[1]));
        } else {
          bad("child must be (nucleus ...) or (sat ...)");
        }
      }
    } else {
      bad("unknown plan part '" + tag + "'");
    }
  }
  if (!saw_nucleus) bad("missing nucleus");
  return node;
}

}  // namespace

std::string SerializePlan(const PlanTree& tree) {
  std::string out;
  SerializeNode(tree.root, &out);
  return out;
}

PlanTree ParsePlan(const std::string& text) {
  return PlanTree{NodeFromSExpr(ReadForm(text))};
}

namespace {

void FormatNode(const PlanNode& node, int indent, std::string* out) {
  std::string pad(indent, ' ');
  *out += pad + node.op_name + " ?p=" + PrintTerm(node.header);
  if (node.existential) *out += " ?q=" + PrintTerm(*node.existential);
  *out += '\n';
  for (int slot : node.order) {
    if (slot < 0) {
      const InformLeaf& l = node.nucleus;
      *out += pad + "  nucleus ";
      *out += l.hypothesized
                  ? "[hypothesized] "
                  : "[utterance " + std::to_string(l.utterance_index) + "] ";
      *out += PrintTerm(l.prop) + "\n";
    } else {
      FormatNode(node.satellites[slot], indent + 2, out);
    }
  }
}

}  // namespace

std::string FormatPlan(const PlanTree& tree, int indent) {
  std::string out;
  FormatNode(tree.root, indent, &out);
  return out;
}

}  // namespace replika
