#ifndef NSMB_CALCULUS_HPP
#define NSMB_CALCULUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "nsmb/nested_sequent.hpp"

namespace nsmb {

// The order on index pairs used by the left box rules in MB: the inverse
// of the inclusion of the threshold sets {x : x >= a} / {x : x > a}.
// Reflexive; returns a = b or a strictly precedes b.
bool modal_precedes(const ModalIdx& a, const ModalIdx& b);

// MB+ side condition (1) for (box L) / (box L sym): identical pairs, or
// one of the listed kind combinations. The equal (o,o) pair counts as an
// identical pair; the clause list alone would leave the completeness
// construction without a rule for it.
bool mbp_cond1(const ModalIdx& a, const ModalIdx& b);

// MB+ side condition (2) for (box L self). The published text says
// "d' is =" though only one index pair occurs in the rule; read as d.
bool mbp_cond2(const ModalIdx& a);

// Mode dispatch for the two conditions above.
bool left_box_cond(const ModalIdx& formula_idx, const ModalIdx& bracket_idx, Logic mode);
bool self_box_cond(const ModalIdx& formula_idx, Logic mode);

enum class RuleId {
  AxiomId, AxiomTop, AxiomBot, AxiomBoxO1,
  Cut, WL, WR, NegL, NegR, AndL, AndR,
  BoxL, BoxLSym, BoxLSelf, BoxC0, BoxR, BoxRSelf, EqRSelf,
};

std::string rule_name(RuleId r);
std::optional<RuleId> rule_from_name(const std::string& name);
bool rule_is_axiom(RuleId r);
std::size_t rule_arity(RuleId r);  // premise count; 0 for axioms

// Where a rule acts: the principal node, the principal (or witness or cut)
// formula, the bracket child position for BoxL/BoxLSym, and the receiving
// node for BoxC0.
struct Focus {
  NodePath path;
  FormulaPtr formula;
  std::optional<std::size_t> child;
  std::optional<NodePath> target;
};

struct Proof {
  NestedSequent conclusion;
  RuleId rule = RuleId::AxiomId;
  Focus focus;
  std::vector<Proof> premises;
};

struct AxiomMatch {
  RuleId rule;
  NodePath path;
  FormulaPtr witness;
};

// First axiom schema matching some node (preorder; per node: Id, Top,
// Bot, then the right-side [o,1] box).
std::optional<AxiomMatch> is_axiom(const NestedSequent& ns, Logic mode);

struct CheckResult {
  bool ok = true;
  std::string message;  // names rule, path and the first violated condition
};

// Independent verification of a derivation against the calculus. Premises
// may retain the principal formula (set absorption) or drop it.
CheckResult check_proof(const Proof& p, Logic mode);

bool proof_uses_rule(const Proof& p, RuleId r);
std::size_t proof_size(const Proof& p);

// Rules from the root down to the leaf of the leftmost branch,
// axiom included.
std::vector<RuleId> proof_rule_spine(const Proof& p);

std::string proof_to_json(const Proof& p);
Proof proof_from_json(const std::string& text, Logic mode);
std::string proof_to_latex(const Proof& p);

// Tree edits used by the checker and the prover; all return copies.
NestedSequent with_left_added(const NestedSequent& ns, const NodePath& path, const FormulaPtr& f);
NestedSequent with_right_added(const NestedSequent& ns, const NodePath& path, const FormulaPtr& f);
NestedSequent with_left_removed(const NestedSequent& ns, const NodePath& path, const FormulaPtr& f);
NestedSequent with_right_removed(const NestedSequent& ns, const NodePath& path, const FormulaPtr& f);
NestedSequent with_child_added(const NestedSequent& ns, const NodePath& path, const ModalIdx& idx,
                               NestedSequent child);

}  // namespace nsmb

#endif
