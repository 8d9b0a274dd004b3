#ifndef NSMB_SEMANTICS_HPP
#define NSMB_SEMANTICS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nsmb/nested_sequent.hpp"

namespace nsmb {

// Finite MB-realization. R is symmetric, 1 on the diagonal and only there;
// the set family P is the full powerset and therefore implicit. Atoms
// absent from the valuation are false everywhere.
struct Model {
  std::vector<std::string> worlds;
  std::vector<std::vector<Rat>> rel;
  std::map<std::string, std::set<int>> val;

  int world_index(const std::string& name) const;  // -1 when unknown
  // Throws std::invalid_argument on an invariant violation.
  void validate() const;
};

// Threshold test of a relation value against a modal index:
// value >= a for c, value > a for o, value == a for =.
bool rel_matches(const Rat& value, const ModalIdx& idx);

bool eval(const Model& m, int world, const FormulaPtr& f);
bool formula_valid_in(const Model& m, const FormulaPtr& f);

// Assignment of nodes (by path) to worlds (by index).
using Embedding = std::map<NodePath, int>;

// True iff every bracket constraint holds: value >= a for [c,a],
// value > a for [o,a], value == a for [=,a]. Throws if a node is unmapped.
bool check_embedding(const NestedSequent& ns, const Model& m, const Embedding& e);

// True iff at every node all left formulas are true and all right
// formulas are false at the assigned world.
bool ns_false_under(const NestedSequent& ns, const Model& m, const Embedding& e);

// Exhaustive enumeration of embeddings; false iff some embedding makes
// the nested-sequent false. Exponential in the node count by design.
bool ns_valid_in(const NestedSequent& ns, const Model& m);

// Witness embedding when ns_valid_in is false.
bool find_falsifying_embedding(const NestedSequent& ns, const Model& m, Embedding& out);

// Reproducible random model. Off-diagonal entries are drawn from the
// pool values below 1 together with midpoints of consecutive pool
// elements, so both strict and non-strict thresholds get exercised.
Model random_model(std::uint64_t seed, int num_worlds, const std::vector<Rat>& value_pool,
                   const std::vector<std::string>& atoms);

Model model_from_json(const std::string& text);
std::string model_to_json(const Model& m);
std::string model_to_dot(const Model& m);

}  // namespace nsmb

#endif
