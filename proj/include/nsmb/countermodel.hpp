#ifndef NSMB_COUNTERMODEL_HPP
#define NSMB_COUNTERMODEL_HPP

#include "nsmb/semantics.hpp"

namespace nsmb {

// Refinement of an index set with exactly one value strictly between each
// consecutive pair, plus the successor map (Suc(1) = 1).
struct InterpSet {
  std::vector<Rat> base;
  std::vector<Rat> full;

  Rat suc(const Rat& v) const;
};

// Inserts arithmetic midpoints; any strictly-between value would do, but
// midpoints are deterministic and exact. corrupt_suc is a test hook for
// the mutation-control suites: it makes suc the identity.
InterpSet interpolate(std::vector<Rat> base, bool corrupt_suc = false);

bool is_interpolated_set(const std::vector<Rat>& base, const std::vector<Rat>& candidate);

struct CanonicalResult {
  Model model;
  Embedding embedding;                 // original input nodes -> canonical worlds
  std::map<NodePath, int> world_of;    // all saturated-tree nodes -> worlds
  NestedSequent saturated;
};

// Builds the canonical model of a saturated, non-axiomatic nested-sequent:
// worlds are the node paths; a c or = bracket of value b gives relation b,
// an o bracket gives Suc(b); the diagonal is 1 and everything else 0.
// The embedding maps each node of the original input to the world at the
// same path (saturation never moves or deletes nodes).
// extra_indices widens the inferred index set (the CLI --indices override);
// values must lie in [0,1].
CanonicalResult canonical_model(const NestedSequent& original, const NestedSequent& saturated,
                                Logic mode, bool corrupt_suc = false,
                                const std::vector<Rat>& extra_indices = {});

// Truth-lemma check (left formulas true, right formulas false at each
// saturated node) plus falsity of the original input under the embedding.
// A false return signals a bug, not a user error.
bool verify_countermodel(const NestedSequent& original, const CanonicalResult& cr, Logic mode);

// Model JSON plus {"embedding": {"<path>": "<world>"}}.
std::string countermodel_to_json(const CanonicalResult& cr);

}  // namespace nsmb

#endif
