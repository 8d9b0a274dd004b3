#include "nsmb/calculus.hpp"

#include <map>

#include "nsmb/print.hpp"

namespace nsmb {

bool modal_precedes(const ModalIdx& a, const ModalIdx& b) {
  if (a == b) return true;
  if (a.kind == b.kind) return a.value < b.value;
  if (a.kind == Dkind::C && b.kind == Dkind::O) return a.value <= b.value;
  if (a.kind == Dkind::O && b.kind == Dkind::C) return b.value > a.value;
  return false;
}

bool mbp_cond1(const ModalIdx& a, const ModalIdx& b) {
  if (a == b) return true;
  if (a.kind == Dkind::Eq && b.kind == Dkind::Eq) return a.value == b.value;
  if (a.kind == Dkind::O && b.kind == Dkind::O) return a.value < b.value;
  if (a.kind == Dkind::O && b.kind == Dkind::Eq) return a.value < b.value;
  return false;
}

bool mbp_cond2(const ModalIdx& a) {
  if (a.kind == Dkind::Eq) return a.value == Rat(1);
  if (a.kind == Dkind::O) return a.value != Rat(1);
  return false;
}

bool left_box_cond(const ModalIdx& formula_idx, const ModalIdx& bracket_idx, Logic mode) {
  return mode == Logic::MB ? modal_precedes(formula_idx, bracket_idx)
                           : mbp_cond1(formula_idx, bracket_idx);
}

bool self_box_cond(const ModalIdx& formula_idx, Logic mode) {
  if (mode == Logic::MB) return !(formula_idx.kind == Dkind::O && formula_idx.value == Rat(1));
  return mbp_cond2(formula_idx);
}

namespace {

const std::map<RuleId, std::string> kRuleNames = {
    {RuleId::AxiomId, "Axiom-Id"},     {RuleId::AxiomTop, "Axiom-Top"},
    {RuleId::AxiomBot, "Axiom-Bot"},   {RuleId::AxiomBoxO1, "Axiom-BoxO1"},
    {RuleId::Cut, "Cut"},              {RuleId::WL, "WL"},
    {RuleId::WR, "WR"},                {RuleId::NegL, "NegL"},
    {RuleId::NegR, "NegR"},            {RuleId::AndL, "AndL"},
    {RuleId::AndR, "AndR"},            {RuleId::BoxL, "BoxL"},
    {RuleId::BoxLSym, "BoxLSym"},      {RuleId::BoxLSelf, "BoxLSelf"},
    {RuleId::BoxC0, "BoxC0"},          {RuleId::BoxR, "BoxR"},
    {RuleId::BoxRSelf, "BoxRSelf"},    {RuleId::EqRSelf, "EqRSelf"},
};

}  // namespace

std::string rule_name(RuleId r) { return kRuleNames.at(r); }

std::optional<RuleId> rule_from_name(const std::string& name) {
  for (const auto& [id, n] : kRuleNames)
    if (n == name) return id;
  return std::nullopt;
}

bool rule_is_axiom(RuleId r) {
  return r == RuleId::AxiomId || r == RuleId::AxiomTop || r == RuleId::AxiomBot ||
         r == RuleId::AxiomBoxO1;
}

std::size_t rule_arity(RuleId r) {
  if (rule_is_axiom(r)) return 0;
  if (r == RuleId::Cut || r == RuleId::AndR) return 2;
  return 1;
}

std::optional<AxiomMatch> is_axiom(const NestedSequent& ns, Logic mode) {
  for (const auto& [path, seq] : nodes(ns)) {
    for (const auto& f : seq->left)
      if (seq->right.count(f)) return AxiomMatch{RuleId::AxiomId, path, f};
    for (const auto& f : seq->right)
      if (f->kind == FKind::Top) return AxiomMatch{RuleId::AxiomTop, path, f};
    for (const auto& f : seq->left)
      if (f->kind == FKind::Bot) return AxiomMatch{RuleId::AxiomBot, path, f};
    for (const auto& f : seq->right)
      if (f->kind == FKind::Box && f->idx.kind == Dkind::O && f->idx.value == Rat(1))
        return AxiomMatch{RuleId::AxiomBoxO1, path, f};
  }
  (void)mode;  // the axiom schemas coincide in both calculi
  return std::nullopt;
}

NestedSequent with_left_added(const NestedSequent& ns, const NodePath& path, const FormulaPtr& f) {
  NestedSequent out = ns;
  find_node(out, path)->node.left.insert(f);
  return out;
}

NestedSequent with_right_added(const NestedSequent& ns, const NodePath& path, const FormulaPtr& f) {
  NestedSequent out = ns;
  find_node(out, path)->node.right.insert(f);
  return out;
}

NestedSequent with_left_removed(const NestedSequent& ns, const NodePath& path, const FormulaPtr& f) {
  NestedSequent out = ns;
  find_node(out, path)->node.left.erase(f);
  return out;
}

NestedSequent with_right_removed(const NestedSequent& ns, const NodePath& path, const FormulaPtr& f) {
  NestedSequent out = ns;
  find_node(out, path)->node.right.erase(f);
  return out;
}

NestedSequent with_child_added(const NestedSequent& ns, const NodePath& path, const ModalIdx& idx,
                               NestedSequent child) {
  NestedSequent out = ns;
  find_node(out, path)->children.emplace_back(idx, std::move(child));
  return out;
}

namespace {

struct RuleError {
  std::string message;
};

using PremiseCandidates = std::vector<std::vector<NestedSequent>>;

std::string at(const Focus& focus) { return " at node " + path_str(focus.path); }

// Computes the admissible premise lists for one rule application: one
// entry per schema instantiation (principal formula dropped in the
// premise, or retained because the context already contains it).
PremiseCandidates expected_premises(const NestedSequent& c, RuleId rule, const Focus& focus,
                                    Logic mode) {
  const NestedSequent* node = find_node(c, focus.path);
  if (!node) throw RuleError{"focus path does not address a node" + at(focus)};
  const FormulaPtr& a = focus.formula;
  if (!a) throw RuleError{"missing principal formula" + at(focus)};

  auto require_left = [&](const char* rn) {
    if (!node->node.left.count(a))
      throw RuleError{std::string(rn) + ": principal formula not on the left" + at(focus)};
  };
  auto require_right = [&](const char* rn) {
    if (!node->node.right.count(a))
      throw RuleError{std::string(rn) + ": principal formula not on the right" + at(focus)};
  };

  switch (rule) {
    case RuleId::Cut: {
      if (!well_formed_for(a, mode)) throw RuleError{"Cut: formula not admissible for mode"};
      return {{with_right_added(c, focus.path, a), with_left_added(c, focus.path, a)}};
    }
    case RuleId::WL:
      require_left("WL");
      return {{with_left_removed(c, focus.path, a)}, {c}};
    case RuleId::WR:
      require_right("WR");
      return {{with_right_removed(c, focus.path, a)}, {c}};
    case RuleId::NegL: {
      require_left("NegL");
      if (a->kind != FKind::Neg) throw RuleError{"NegL: principal formula is not a negation"};
      NestedSequent keep = with_right_added(c, focus.path, a->lhs);
      return {{with_left_removed(keep, focus.path, a)}, {keep}};
    }
    case RuleId::NegR: {
      require_right("NegR");
      if (a->kind != FKind::Neg) throw RuleError{"NegR: principal formula is not a negation"};
      NestedSequent keep = with_left_added(c, focus.path, a->lhs);
      return {{with_right_removed(keep, focus.path, a)}, {keep}};
    }
    case RuleId::AndL: {
      require_left("AndL");
      if (a->kind != FKind::And) throw RuleError{"AndL: principal formula is not a conjunction"};
      NestedSequent keep = with_left_added(with_left_added(c, focus.path, a->lhs), focus.path, a->rhs);
      return {{with_left_removed(keep, focus.path, a)}, {keep}};
    }
    case RuleId::AndR: {
      require_right("AndR");
      if (a->kind != FKind::And) throw RuleError{"AndR: principal formula is not a conjunction"};
      NestedSequent base_drop = with_right_removed(c, focus.path, a);
      return {{with_right_added(base_drop, focus.path, a->lhs),
               with_right_added(base_drop, focus.path, a->rhs)},
              {with_right_added(c, focus.path, a->lhs), with_right_added(c, focus.path, a->rhs)}};
    }
    case RuleId::BoxLSelf: {
      require_left("BoxLSelf");
      if (a->kind != FKind::Box) throw RuleError{"BoxLSelf: principal formula is not a box"};
      if (!self_box_cond(a->idx, mode))
        throw RuleError{"BoxLSelf: side condition (2) fails for [" + idx_str(a->idx) + "]" + at(focus)};
      NestedSequent keep = with_left_added(c, focus.path, a->lhs);
      return {{with_left_removed(keep, focus.path, a)}, {keep}};
    }
    case RuleId::BoxRSelf: {
      if (mode != Logic::MB) throw RuleError{"BoxRSelf: rule only exists in MB"};
      require_right("BoxRSelf");
      if (a->kind != FKind::Box || a->idx.kind != Dkind::C || a->idx.value != Rat(1))
        throw RuleError{"BoxRSelf: principal formula is not a [c,1] box"};
      NestedSequent keep = with_right_added(c, focus.path, a->lhs);
      return {{with_right_removed(keep, focus.path, a)}, {keep}};
    }
    case RuleId::EqRSelf: {
      if (mode != Logic::MBPlus) throw RuleError{"EqRSelf: rule only exists in MB+"};
      require_right("EqRSelf");
      if (a->kind != FKind::Box || a->idx.kind != Dkind::Eq || a->idx.value != Rat(1))
        throw RuleError{"EqRSelf: principal formula is not a [=,1] box"};
      NestedSequent keep = with_right_added(c, focus.path, a->lhs);
      return {{with_right_removed(keep, focus.path, a)}, {keep}};
    }
    case RuleId::BoxR: {
      require_right("BoxR");
      if (a->kind != FKind::Box) throw RuleError{"BoxR: principal formula is not a box"};
      if (a->idx.value == Rat(1))
        throw RuleError{"BoxR: bracket index 1 is not legal" + at(focus)};
      NestedSequent child;
      child.node.right.insert(a->lhs);
      NestedSequent keep = with_child_added(c, focus.path, a->idx, std::move(child));
      return {{with_right_removed(keep, focus.path, a)}, {keep}};
    }
    case RuleId::BoxL:
    case RuleId::BoxLSym: {
      if (!focus.child) throw RuleError{rule_name(rule) + ": missing bracket child in focus"};
      if (*focus.child >= node->children.size())
        throw RuleError{rule_name(rule) + ": bracket child out of range" + at(focus)};
      const ModalIdx& bracket = node->children[*focus.child].first;
      NodePath child_path = focus.path;
      child_path.push_back(*focus.child);
      if (a->kind != FKind::Box)
        throw RuleError{rule_name(rule) + ": principal formula is not a box"};
      if (!left_box_cond(a->idx, bracket, mode))
        throw RuleError{rule_name(rule) + ": side condition (1) fails: [" + idx_str(a->idx) +
                        "] vs bracket [" + idx_str(bracket) + "]" + at(focus)};
      if (rule == RuleId::BoxL) {
        require_left("BoxL");
        NestedSequent keep = with_left_added(c, child_path, a->lhs);
        return {{with_left_removed(keep, focus.path, a)}, {keep}};
      }
      const NestedSequent* child = find_node(c, child_path);
      if (!child->node.left.count(a))
        throw RuleError{"BoxLSym: principal formula not on the left of the bracket child" + at(focus)};
      NestedSequent keep = with_left_added(c, focus.path, a->lhs);
      return {{with_left_removed(keep, child_path, a)}, {keep}};
    }
    case RuleId::BoxC0: {
      require_left("BoxC0");
      if (a->kind != FKind::Box || a->idx.kind != Dkind::C || a->idx.value != Rat(0))
        throw RuleError{"BoxC0: principal formula is not a [c,0] box"};
      NodePath target = focus.target.value_or(focus.path);
      if (!find_node(c, target)) throw RuleError{"BoxC0: target path does not address a node"};
      NestedSequent keep = with_left_added(c, target, a->lhs);
      return {{with_left_removed(keep, focus.path, a)}, {keep}};
    }
    default:
      throw RuleError{"axiom used as an inference rule"};
  }
}

void check_node(const Proof& p, Logic mode) {
  if (!ns_well_formed(p.conclusion, mode))
    throw RuleError{"conclusion is not well formed for the mode: " + print_ns(p.conclusion)};
  if (p.premises.size() != rule_arity(p.rule))
    throw RuleError{rule_name(p.rule) + ": expected " + std::to_string(rule_arity(p.rule)) +
                    " premises, got " + std::to_string(p.premises.size())};

  if (rule_is_axiom(p.rule)) {
    const NestedSequent* node = find_node(p.conclusion, p.focus.path);
    if (!node) throw RuleError{"axiom focus path does not address a node"};
    const FormulaPtr& a = p.focus.formula;
    if (!a) throw RuleError{"axiom witness formula missing"};
    switch (p.rule) {
      case RuleId::AxiomId:
        if (!node->node.left.count(a) || !node->node.right.count(a))
          throw RuleError{"Axiom-Id: witness not on both sides" + at(p.focus)};
        break;
      case RuleId::AxiomTop:
        if (a->kind != FKind::Top || !node->node.right.count(a))
          throw RuleError{"Axiom-Top: no T on the right" + at(p.focus)};
        break;
      case RuleId::AxiomBot:
        if (a->kind != FKind::Bot || !node->node.left.count(a))
          throw RuleError{"Axiom-Bot: no F on the left" + at(p.focus)};
        break;
      case RuleId::AxiomBoxO1:
        if (a->kind != FKind::Box || a->idx.kind != Dkind::O || a->idx.value != Rat(1) ||
            !node->node.right.count(a))
          throw RuleError{"Axiom-BoxO1: no [o,1] box on the right" + at(p.focus)};
        break;
      default:
        break;
    }
    return;
  }

  PremiseCandidates candidates = expected_premises(p.conclusion, p.rule, p.focus, mode);
  bool matched = false;
  for (const auto& cand : candidates) {
    bool all = cand.size() == p.premises.size();
    for (std::size_t i = 0; all && i < cand.size(); ++i)
      all = ns_equal(cand[i], p.premises[i].conclusion);
    if (all) { matched = true; break; }
  }
  if (!matched)
    throw RuleError{rule_name(p.rule) + ": premises do not match the schema" + at(p.focus) +
                    "; conclusion: " + print_ns(p.conclusion)};

  for (const auto& prem : p.premises) check_node(prem, mode);
}

}  // namespace

CheckResult check_proof(const Proof& p, Logic mode) {
  try {
    check_node(p, mode);
    return {true, ""};
  } catch (const RuleError& e) {
    return {false, e.message};
  }
}

bool proof_uses_rule(const Proof& p, RuleId r) {
  if (p.rule == r) return true;
  for (const auto& prem : p.premises)
    if (proof_uses_rule(prem, r)) return true;
  return false;
}

std::size_t proof_size(const Proof& p) {
  std::size_t n = 1;
  for (const auto& prem : p.premises) n += proof_size(prem);
  return n;
}

std::vector<RuleId> proof_rule_spine(const Proof& p) {
  std::vector<RuleId> out;
  const Proof* cur = &p;
  while (true) {
    out.push_back(cur->rule);
    if (cur->premises.empty()) return out;
    cur = &cur->premises.front();
  }
}

}  // namespace nsmb
