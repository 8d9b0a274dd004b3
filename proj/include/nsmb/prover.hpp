#ifndef NSMB_PROVER_HPP
#define NSMB_PROVER_HPP

#include <cstdint>
#include <optional>

#include "nsmb/calculus.hpp"

namespace nsmb {

struct TraceEntry {
  int step = 0;  // saturation step number 1..10
  Focus focus;
};

struct PathFormulaLess {
  bool operator()(const std::pair<NodePath, FormulaPtr>& a,
                  const std::pair<NodePath, FormulaPtr>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return cmp(a.second, b.second) < 0;
  }
};

// One branch of the backward search. expanded_boxr records the
// (node, box formula) pairs already given their step-8 child; it only grows.
struct SearchState {
  NestedSequent current;
  std::set<std::pair<NodePath, FormulaPtr>, PathFormulaLess> expanded_boxr;
  std::vector<TraceEntry> trace;
};

struct StepInstance {
  int step;
  RuleId rule;
  Focus focus;
};

// Every applicable saturation step instance, in the fixed priority order
// 1,3,4,9,10,5,6,7,2,8 (node creation last; the self box step after the
// bracket box steps so the worked-example derivations come out minimal).
// A step applies only if it would change the nested-sequent; step 8
// additionally requires an unexpanded (path, formula) pair, index != 1,
// and no proper ancestor with an identical sequent (ancestor blocking —
// the universal modality diverges without it).
std::vector<StepInstance> saturation_steps(const SearchState& s, Logic mode);

struct ProverOptions {
  Logic mode = Logic::MB;
  std::size_t max_steps = 100000;  // guard against malformed inputs only
  // Test hook for the mutation-control suites: ignore side condition (1)
  // on the bracket box steps.
  bool drop_side_condition_1 = false;
};

struct Verdict {
  bool provable = false;
  std::optional<Proof> proof;             // cut-free, passes check_proof
  std::optional<NestedSequent> saturated; // first fully saturated open branch
  std::vector<TraceEntry> trace;          // of the proof search / open branch
  std::size_t steps_used = 0;             // across all branches
  std::size_t step_bound = 0;             // computed termination bound B
  std::size_t boxr_expansions = 0;        // step-8 count on the open branch
};

// Termination bound: formula additions are capped by nodes x subformulas
// per side, and node creation by one child per (node, right box) pair with
// spawn chains no deeper than the modal depth.
std::size_t step_bound(const NestedSequent& ns);

Verdict prove(const NestedSequent& ns, const ProverOptions& opts = {});

bool provable(const FormulaPtr& f, Logic mode);

std::string trace_to_json(const std::vector<TraceEntry>& trace);

}  // namespace nsmb

#endif
