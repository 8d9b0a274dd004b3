#include "nsmb/prover.hpp"

#include <stdexcept>

#include "json.hpp"
#include "nsmb/print.hpp"

namespace nsmb {

namespace {

// Branching (step 2) runs before node creation (step 8) so a node is fully
// decomposed before it spawns; ancestor blocking compares whole sequents
// and needs the pending conjunction choices resolved to ever match.
constexpr int kStepOrder[] = {1, 3, 4, 9, 10, 5, 6, 7, 2, 8};

int step_for_rule(RuleId r) {
  switch (r) {
    case RuleId::AndL: return 1;
    case RuleId::AndR: return 2;
    case RuleId::NegL: return 3;
    case RuleId::NegR: return 4;
    case RuleId::BoxL: return 5;
    case RuleId::BoxLSym: return 6;
    case RuleId::BoxLSelf: return 7;
    case RuleId::BoxR: return 8;
    case RuleId::BoxRSelf:
    case RuleId::EqRSelf: return 9;
    case RuleId::BoxC0: return 10;
    default: return 0;
  }
}

// A node whose sequent equals a proper ancestor's never spawns children:
// without this the universal modality can re-derive the same right box at
// every fresh node and the procedure diverges. The countermodel lets a
// blocked node borrow the ancestor's witness child (see canonical_model).
bool spawn_blocked(const NestedSequent& ns, const NodePath& path, const Sequent& seq) {
  const NestedSequent* cur = &ns;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (sequent_equal(cur->node, seq)) return true;
    cur = &cur->children[path[i]].second;
  }
  return false;
}

void enumerate_step(const SearchState& s, Logic mode, int step, bool drop_cond1,
                    std::vector<StepInstance>& out) {
  const NestedSequent& ns = s.current;
  auto all = nodes(ns);
  switch (step) {
    case 1:
      for (const auto& [path, seq] : all)
        for (const auto& f : seq->left)
          if (f->kind == FKind::And &&
              (!seq->left.count(f->lhs) || !seq->left.count(f->rhs)))
            out.push_back({1, RuleId::AndL, Focus{path, f, {}, {}}});
      break;
    case 2:
      for (const auto& [path, seq] : all)
        for (const auto& f : seq->right)
          if (f->kind == FKind::And && !seq->right.count(f->lhs) && !seq->right.count(f->rhs))
            out.push_back({2, RuleId::AndR, Focus{path, f, {}, {}}});
      break;
    case 3:
      for (const auto& [path, seq] : all)
        for (const auto& f : seq->left)
          if (f->kind == FKind::Neg && !seq->right.count(f->lhs))
            out.push_back({3, RuleId::NegL, Focus{path, f, {}, {}}});
      break;
    case 4:
      for (const auto& [path, seq] : all)
        for (const auto& f : seq->right)
          if (f->kind == FKind::Neg && !seq->left.count(f->lhs))
            out.push_back({4, RuleId::NegR, Focus{path, f, {}, {}}});
      break;
    case 5:
    case 6:
      for (const auto& [path, seq] : all) {
        const NestedSequent* parent = find_node(ns, path);
        for (std::size_t j = 0; j < parent->children.size(); ++j) {
          const ModalIdx& bracket = parent->children[j].first;
          const Sequent& child = parent->children[j].second.node;
          if (step == 5) {
            for (const auto& f : seq->left)
              if (f->kind == FKind::Box &&
                  (drop_cond1 || left_box_cond(f->idx, bracket, mode)) &&
                  !child.left.count(f->lhs))
                out.push_back({5, RuleId::BoxL, Focus{path, f, j, {}}});
          } else {
            for (const auto& f : child.left)
              if (f->kind == FKind::Box &&
                  (drop_cond1 || left_box_cond(f->idx, bracket, mode)) &&
                  !seq->left.count(f->lhs))
                out.push_back({6, RuleId::BoxLSym, Focus{path, f, j, {}}});
          }
        }
      }
      break;
    case 7:
      for (const auto& [path, seq] : all)
        for (const auto& f : seq->left)
          if (f->kind == FKind::Box && self_box_cond(f->idx, mode) && !seq->left.count(f->lhs))
            out.push_back({7, RuleId::BoxLSelf, Focus{path, f, {}, {}}});
      break;
    case 8:
      for (const auto& [path, seq] : all) {
        if (spawn_blocked(ns, path, *seq)) continue;
        for (const auto& f : seq->right)
          if (f->kind == FKind::Box && f->idx.value != Rat(1) &&
              !s.expanded_boxr.count({path, f}))
            out.push_back({8, RuleId::BoxR, Focus{path, f, {}, {}}});
      }
      break;
    case 9: {
      Dkind self_kind = mode == Logic::MB ? Dkind::C : Dkind::Eq;
      RuleId rule = mode == Logic::MB ? RuleId::BoxRSelf : RuleId::EqRSelf;
      for (const auto& [path, seq] : all)
        for (const auto& f : seq->right)
          if (f->kind == FKind::Box && f->idx.kind == self_kind && f->idx.value == Rat(1) &&
              !seq->right.count(f->lhs))
            out.push_back({9, rule, Focus{path, f, {}, {}}});
      break;
    }
    case 10:
      for (const auto& [path, seq] : all)
        for (const auto& f : seq->left)
          if (f->kind == FKind::Box && f->idx.kind == Dkind::C && f->idx.value == Rat(0))
            for (const auto& [target, tseq] : all)
              if (!tseq->left.count(f->lhs))
                out.push_back({10, RuleId::BoxC0, Focus{path, f, {}, target}});
      break;
  }
}

void apply_step(SearchState& s, const StepInstance& inst) {
  const FormulaPtr& f = inst.focus.formula;
  const NodePath& path = inst.focus.path;
  NestedSequent& cur = s.current;
  switch (inst.step) {
    case 1:
      cur = with_left_added(with_left_added(cur, path, f->lhs), path, f->rhs);
      break;
    case 3:
      cur = with_right_added(cur, path, f->lhs);
      break;
    case 4:
    case 7:
      cur = with_left_added(cur, path, f->lhs);
      break;
    case 5: {
      NodePath child = path;
      child.push_back(*inst.focus.child);
      cur = with_left_added(cur, child, f->lhs);
      break;
    }
    case 6:
      cur = with_left_added(cur, path, f->lhs);
      break;
    case 8: {
      NestedSequent child;
      child.node.right.insert(f->lhs);
      cur = with_child_added(cur, path, f->idx, std::move(child));
      s.expanded_boxr.insert({path, f});
      break;
    }
    case 9:
      cur = with_right_added(cur, path, f->lhs);
      break;
    case 10:
      cur = with_left_added(cur, *inst.focus.target, f->lhs);
      break;
    default:
      throw std::logic_error("apply_step: not a single-premise step");
  }
  s.trace.push_back({inst.step, inst.focus});
}

struct OpenBranch {
  NestedSequent saturated;
  std::vector<TraceEntry> trace;
  std::size_t boxr_expansions = 0;
};

struct Search {
  Logic mode;
  std::size_t max_steps;
  std::size_t bound;
  bool drop_cond1;
  std::size_t steps_used = 0;
  std::optional<OpenBranch> open;

  // Runs one branch to closure or saturation. Closed branches return the
  // proof; an open branch records the saturated sequent and returns none.
  std::optional<Proof> run(SearchState st) {
    // (conclusion, rule, focus) per applied single-premise step; folded
    // into a proof spine once the branch closes.
    std::vector<std::tuple<NestedSequent, RuleId, Focus>> spine;
    while (true) {
      if (auto ax = is_axiom(st.current, mode)) {
        Proof p{st.current, ax->rule, Focus{ax->path, ax->witness, {}, {}}, {}};
        return fold(std::move(spine), std::move(p));
      }
      auto steps = saturation_steps_impl(st);
      if (steps.empty()) {
        if (!open) open = OpenBranch{st.current, st.trace, st.expanded_boxr.size()};
        return std::nullopt;
      }
      const StepInstance& inst = steps.front();
      if (++steps_used > max_steps)
        throw std::runtime_error("prover step budget exhausted (max_steps)");
      if (inst.step == 2) {
        NestedSequent concl = st.current;
        SearchState left = st;
        left.current = with_right_added(left.current, inst.focus.path, inst.focus.formula->lhs);
        left.trace.push_back({2, inst.focus});
        check_growth(concl, left);
        auto pa = run(std::move(left));
        if (!pa) return std::nullopt;
        SearchState right = std::move(st);
        right.current = with_right_added(right.current, inst.focus.path, inst.focus.formula->rhs);
        right.trace.push_back({2, inst.focus});
        auto pb = run(std::move(right));
        if (!pb) return std::nullopt;
        Proof p{std::move(concl), RuleId::AndR, inst.focus, {std::move(*pa), std::move(*pb)}};
        return fold(std::move(spine), std::move(p));
      }
      spine.emplace_back(st.current, inst.rule, inst.focus);
      NestedSequent before = st.current;
      apply_step(st, inst);
      check_growth(before, st);
    }
  }

  std::vector<StepInstance> saturation_steps_impl(const SearchState& s) const {
    std::vector<StepInstance> out;
    for (int step : kStepOrder) enumerate_step(s, mode, step, drop_cond1, out);
    return out;
  }

  void check_growth(const NestedSequent& before, const SearchState& after) const {
    if (!ns_subsumes(before, after.current))
      throw std::logic_error("saturation step removed a formula or node");
    if (after.trace.size() > bound)
      throw std::logic_error("saturation exceeded the computed termination bound");
  }

  static std::optional<Proof> fold(std::vector<std::tuple<NestedSequent, RuleId, Focus>> spine,
                                   Proof leaf) {
    Proof p = std::move(leaf);
    for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
      Proof node{std::move(std::get<0>(*it)), std::get<1>(*it), std::move(std::get<2>(*it)), {}};
      node.premises.push_back(std::move(p));
      p = std::move(node);
    }
    return p;
  }
};

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > SIZE_MAX / a) return SIZE_MAX;
  return a * b;
}

}  // namespace

std::vector<StepInstance> saturation_steps(const SearchState& s, Logic mode) {
  std::vector<StepInstance> out;
  for (int step : kStepOrder) enumerate_step(s, mode, step, false, out);
  return out;
}

std::size_t step_bound(const NestedSequent& ns) {
  FormulaSet subs = all_subformulas(ns);
  std::size_t nsub = subs.size();
  std::size_t nbox = 0;
  int depth = 0;
  for (const auto& f : subs) {
    if (f->kind == FKind::Box) ++nbox;
    depth = std::max(depth, modal_depth(f));
  }
  std::size_t n0 = node_count(ns);
  // The universal modality re-injects formulas at full modal depth, so the
  // depth-decreasing argument below does not apply; spawn chains are then
  // capped by ancestor blocking (distinct sequent contents along a path)
  // instead, which only yields an astronomically large bound.
  for (const auto& f : subs)
    if (f->kind == FKind::Box && f->idx.kind == Dkind::C && f->idx.value == Rat(0)) {
      std::size_t per_path = 1;
      for (std::size_t i = 0; i < 2 * nsub + 2; ++i) per_path = saturating_mul(per_path, 4);
      return saturating_mul(saturating_mul(n0, per_path), 2 * nsub + 1);
    }
  // Spawn chains shorten the modal depth at each hop.
  std::size_t fanout = 1, max_nodes = 1;
  for (int d = 1; d <= depth; ++d) {
    fanout = saturating_mul(fanout, nbox);
    max_nodes += fanout;
    if (max_nodes == SIZE_MAX) break;
  }
  max_nodes = saturating_mul(n0, max_nodes);
  // Each node absorbs each subformula at most once per side; plus one
  // step per node creation.
  return saturating_mul(max_nodes, 2 * nsub + 1);
}

Verdict prove(const NestedSequent& ns, const ProverOptions& opts) {
  if (!ns_well_formed(ns, opts.mode))
    throw std::invalid_argument("nested-sequent is not well formed for the mode");
  Search search{opts.mode, opts.max_steps, step_bound(ns), opts.drop_side_condition_1};
  SearchState init{ns, {}, {}};
  auto proof = search.run(std::move(init));
  Verdict v;
  v.steps_used = search.steps_used;
  v.step_bound = search.bound;
  if (proof) {
    v.provable = true;
    v.proof = std::move(proof);
  } else {
    v.provable = false;
    v.saturated = std::move(search.open->saturated);
    v.trace = std::move(search.open->trace);
    v.boxr_expansions = search.open->boxr_expansions;
  }
  return v;
}

bool provable(const FormulaPtr& f, Logic mode) {
  NestedSequent ns;
  ns.node.right.insert(f);
  return prove(ns, {.mode = mode}).provable;
}

std::string trace_to_json(const std::vector<TraceEntry>& trace) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : trace) {
    nlohmann::json j;
    j["step"] = e.step;
    j["path"] = e.focus.path;
    if (e.focus.formula) j["formula"] = print_formula(e.focus.formula);
    if (e.focus.child) j["child"] = *e.focus.child;
    if (e.focus.target) j["target"] = *e.focus.target;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace nsmb
