#ifndef NSMB_NESTED_SEQUENT_HPP
#define NSMB_NESTED_SEQUENT_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "nsmb/formula.hpp"

namespace nsmb {

// Two-sided sequent over duplicate-free formula sets.
struct Sequent {
  FormulaSet left;
  FormulaSet right;
};

// Rooted tree of sequents; each edge carries a modal bracket index.
// Children are stored in order for stable paths and printing, but two
// nested-sequents compare equal up to child permutation (cmp_ns below).
struct NestedSequent {
  Sequent node;
  std::vector<std::pair<ModalIdx, NestedSequent>> children;
};

// Child positions from the root; empty path = root. Node identity is by
// path: equal sequents at different paths are distinct nodes.
using NodePath = std::vector<std::size_t>;

std::string path_str(const NodePath& p);

const NestedSequent* find_node(const NestedSequent& ns, const NodePath& path);
NestedSequent* find_node(NestedSequent& ns, const NodePath& path);

// Preorder traversal.
std::vector<std::pair<NodePath, const Sequent*>> nodes(const NestedSequent& ns);
std::size_t node_count(const NestedSequent& ns);

// All index values of modal operators and brackets, plus 0 and 1, sorted.
std::vector<Rat> index_set(const NestedSequent& ns);

// All subformulas of all formulas anywhere in the tree.
FormulaSet all_subformulas(const NestedSequent& ns);

// tau translation: a node becomes conj(left) -> disj(right), each child
// subtree a disjunct Box(idx, tau(child)). Empty conjunction is Top,
// empty disjunction is Bot.
FormulaPtr tau(const NestedSequent& ns);

// Structural equality of the local sequents (children ignored).
bool sequent_equal(const Sequent& a, const Sequent& b);

// Total order treating children as a multiset.
int cmp_ns(const NestedSequent& a, const NestedSequent& b);
bool ns_equal(const NestedSequent& a, const NestedSequent& b);

// True if b has the same tree shape as a extended only by extra formulas
// and extra trailing children (the monotone-growth relation of saturation).
bool ns_subsumes(const NestedSequent& small, const NestedSequent& big);

// True if every bracket value != 1 and every modal index is admissible
// for the mode and lies in [0,1].
bool ns_well_formed(const NestedSequent& ns, Logic mode);

}  // namespace nsmb

#endif
