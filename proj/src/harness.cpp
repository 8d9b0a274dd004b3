#include "nsmb/harness.hpp"

#include "json.hpp"
#include "nsmb/print.hpp"

namespace nsmb {

namespace {

std::vector<std::string> atom_names(int n) {
  static const char* kNames[] = {"p", "q", "r", "s", "u", "v"};
  std::vector<std::string> out;
  for (int i = 0; i < n && i < 6; ++i) out.emplace_back(kNames[i]);
  return out;
}

Rat pick_value(Rng& rng, const std::vector<Rat>& pool) {
  std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
  return pool[d(rng)];
}

ModalIdx random_box_idx(Rng& rng, const FuzzConfig& cfg) {
  std::uniform_int_distribution<int> kind(0, 1);
  if (cfg.mode == Logic::MB) {
    return {kind(rng) == 0 ? Dkind::C : Dkind::O, pick_value(rng, cfg.index_pool)};
  }
  // MB+: = with value > 0, o with any value, plus the universal [c,0].
  std::uniform_int_distribution<int> kind3(0, 5);
  int k = kind3(rng);
  if (k == 0) return {Dkind::C, Rat(0)};
  if (k <= 2) return {Dkind::O, pick_value(rng, cfg.index_pool)};
  Rat v = pick_value(rng, cfg.index_pool);
  if (v == Rat(0)) v = Rat(1);
  return {Dkind::Eq, v};
}

ModalIdx random_bracket_idx(Rng& rng, const FuzzConfig& cfg) {
  ModalIdx idx = random_box_idx(rng, cfg);
  while (idx.value == Rat(1)) {
    if (idx.kind == Dkind::Eq) {
      idx.value = pick_value(rng, cfg.index_pool);
      if (idx.value == Rat(0)) idx.value = Rat(1, 2);
    } else {
      idx.value = pick_value(rng, cfg.index_pool);
    }
    if (idx.value == Rat(1)) idx = random_box_idx(rng, cfg);
  }
  return idx;
}

}  // namespace

FormulaPtr random_formula(Rng& rng, const FuzzConfig& cfg, int depth) {
  std::uniform_int_distribution<int> leaf(0, 9);
  if (depth <= 0) {
    int k = leaf(rng);
    if (k == 8) return mk_top();
    if (k == 9) return mk_bot();
    auto names = atom_names(cfg.atom_alphabet);
    return mk_atom(names[k % names.size()]);
  }
  std::uniform_int_distribution<int> shape(0, 9);
  switch (shape(rng)) {
    case 0: return random_formula(rng, cfg, 0);
    case 1: return mk_neg(random_formula(rng, cfg, depth - 1));
    case 2:
    case 3:
      return mk_and(random_formula(rng, cfg, depth - 1), random_formula(rng, cfg, depth - 1));
    case 4:
      return mk_or(random_formula(rng, cfg, depth - 1), random_formula(rng, cfg, depth - 1));
    case 5:
      return mk_imp(random_formula(rng, cfg, depth - 1), random_formula(rng, cfg, depth - 1));
    case 6:
      return mk_diamond(random_box_idx(rng, cfg), random_formula(rng, cfg, depth - 1));
    default:
      return mk_box(random_box_idx(rng, cfg), random_formula(rng, cfg, depth - 1));
  }
}

namespace {

NestedSequent random_tree(Rng& rng, const FuzzConfig& cfg, int tree_depth) {
  NestedSequent ns;
  std::uniform_int_distribution<int> nforms(0, 2);
  std::uniform_int_distribution<int> fdepth(0, cfg.max_formula_depth);
  for (int i = nforms(rng); i > 0; --i)
    ns.node.left.insert(random_formula(rng, cfg, fdepth(rng)));
  for (int i = nforms(rng); i > 0; --i)
    ns.node.right.insert(random_formula(rng, cfg, fdepth(rng)));
  if (tree_depth > 0) {
    std::uniform_int_distribution<int> nchild(0, tree_depth == cfg.max_tree_depth ? 2 : 1);
    for (int i = nchild(rng); i > 0; --i)
      ns.children.emplace_back(random_bracket_idx(rng, cfg), random_tree(rng, cfg, tree_depth - 1));
  }
  return ns;
}

}  // namespace

NestedSequent random_ns(Rng& rng, const FuzzConfig& cfg) {
  return random_tree(rng, cfg, cfg.max_tree_depth);
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["total"] = total;
  j["provable"] = provable;
  j["unprovable"] = unprovable;
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : violations)
    vs.push_back({{"kind", v.kind}, {"input", v.input}, {"detail", v.detail}});
  j["violations"] = std::move(vs);
  return j.dump(2);
}

std::string Report::to_text() const {
  std::string out = suite + ": total=" + std::to_string(total) +
                    " provable=" + std::to_string(provable) +
                    " unprovable=" + std::to_string(unprovable) +
                    " violations=" + std::to_string(violations.size()) + "\n";
  for (const auto& v : violations)
    out += "  [" + v.kind + "] " + v.input + " -- " + v.detail + "\n";
  return out;
}

namespace {

ProverOptions prover_opts(const FuzzConfig& cfg) {
  return {.mode = cfg.mode, .max_steps = cfg.max_steps,
          .drop_side_condition_1 = cfg.drop_side_condition_1};
}

Model draw_model(Rng& rng, const FuzzConfig& cfg) {
  std::uniform_int_distribution<int> worlds(1, cfg.model_worlds);
  return random_model(rng(), worlds(rng), cfg.index_pool, atom_names(cfg.atom_alphabet));
}

}  // namespace

Report soundness_suite(const FuzzConfig& cfg) {
  Report rep;
  rep.suite = "soundness";
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.count; ++i) {
    NestedSequent ns = random_ns(rng, cfg);
    std::string text = print_ns(ns);
    ++rep.total;
    Verdict v;
    try {
      v = prove(ns, prover_opts(cfg));
    } catch (const std::exception& e) {
      rep.violations.push_back({"prover-error", text, e.what()});
      continue;
    }
    if (!v.provable) {
      ++rep.unprovable;
      continue;
    }
    ++rep.provable;
    if (proof_uses_rule(*v.proof, RuleId::Cut))
      rep.violations.push_back({"cut-in-output", text, "prover emitted a Cut"});
    CheckResult cr = check_proof(*v.proof, cfg.mode);
    if (!cr.ok) rep.violations.push_back({"proof-check", text, cr.message});
    for (int j = 0; j < cfg.models_per_case; ++j) {
      Model m = draw_model(rng, cfg);
      Embedding e;
      if (find_falsifying_embedding(ns, m, e)) {
        rep.violations.push_back({"soundness", text,
                                  "provable sequent false in model " + model_to_json(m)});
        break;
      }
    }
  }
  return rep;
}

Report completeness_suite(const FuzzConfig& cfg) {
  Report rep;
  rep.suite = "completeness";
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.count; ++i) {
    NestedSequent ns = random_ns(rng, cfg);
    std::string text = print_ns(ns);
    ++rep.total;
    Verdict v;
    try {
      v = prove(ns, prover_opts(cfg));
    } catch (const std::exception& e) {
      rep.violations.push_back({"prover-error", text, e.what()});
      continue;
    }
    if (v.provable) {
      ++rep.provable;
      continue;
    }
    ++rep.unprovable;
    try {
      CanonicalResult cr = canonical_model(ns, *v.saturated, cfg.mode, cfg.corrupt_suc);
      if (!verify_countermodel(ns, cr, cfg.mode))
        rep.violations.push_back({"countermodel", text, "truth lemma or falsity check failed"});
    } catch (const std::exception& e) {
      rep.violations.push_back({"countermodel-error", text, e.what()});
    }
  }
  return rep;
}

Report tau_suite(const FuzzConfig& cfg) {
  Report rep;
  rep.suite = "tau";
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.count; ++i) {
    NestedSequent ns = random_ns(rng, cfg);
    std::string text = print_ns(ns);
    ++rep.total;
    FormulaPtr t = tau(ns);
    NestedSequent wrapped;
    wrapped.node.right.insert(t);
    bool p1, p2;
    try {
      p1 = prove(ns, prover_opts(cfg)).provable;
      p2 = prove(wrapped, prover_opts(cfg)).provable;
    } catch (const std::exception& e) {
      rep.violations.push_back({"prover-error", text, e.what()});
      continue;
    }
    (p1 ? rep.provable : rep.unprovable)++;
    if (p1 != p2)
      rep.violations.push_back({"tau-provability", text,
                                std::string("ns ") + (p1 ? "provable" : "unprovable") +
                                    " but tau " + (p2 ? "provable" : "unprovable")});
    for (int j = 0; j < cfg.models_per_case; ++j) {
      Model m = draw_model(rng, cfg);
      if (ns_valid_in(ns, m) != formula_valid_in(m, t)) {
        rep.violations.push_back({"tau-model", text, "per-model disagreement"});
        break;
      }
    }
  }
  return rep;
}

FormulaPtr translate_c_to_mbplus(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Atom:
    case FKind::Top:
    case FKind::Bot:
      return f;
    case FKind::Neg:
      return mk_neg(translate_c_to_mbplus(f->lhs));
    case FKind::And:
      return mk_and(translate_c_to_mbplus(f->lhs), translate_c_to_mbplus(f->rhs));
    case FKind::Box: {
      FormulaPtr body = translate_c_to_mbplus(f->lhs);
      if (f->idx.kind == Dkind::C && f->idx.value != Rat(0))
        return mk_and(mk_box({Dkind::O, f->idx.value}, body),
                      mk_box({Dkind::Eq, f->idx.value}, body));
      return mk_box(f->idx, body);
    }
  }
  return f;
}

Report mbplus_translation_suite(const FuzzConfig& cfg) {
  Report rep;
  rep.suite = "mbplus-translation";
  FuzzConfig mb_cfg = cfg;
  mb_cfg.mode = Logic::MB;
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.count; ++i) {
    FormulaPtr f = random_formula(rng, mb_cfg, mb_cfg.max_formula_depth);
    std::string text = print_formula(f);
    ++rep.total;
    try {
      bool mb = provable(f, Logic::MB);
      bool mbp = provable(translate_c_to_mbplus(f), Logic::MBPlus);
      (mb ? rep.provable : rep.unprovable)++;
      if (mb != mbp)
        rep.violations.push_back({"translation", text,
                                  std::string("MB ") + (mb ? "provable" : "unprovable") +
                                      " but MB+ translation " +
                                      (mbp ? "provable" : "unprovable")});
    } catch (const std::exception& e) {
      rep.violations.push_back({"prover-error", text, e.what()});
    }
  }
  return rep;
}

Report bounds_suite(const FuzzConfig& cfg) {
  Report rep;
  rep.suite = "bounds";
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.count; ++i) {
    NestedSequent ns = random_ns(rng, cfg);
    std::string text = print_ns(ns);
    ++rep.total;
    Verdict v;
    try {
      v = prove(ns, prover_opts(cfg));  // throws if the computed bound is exceeded
    } catch (const std::exception& e) {
      rep.violations.push_back({"bound", text, e.what()});
      continue;
    }
    (v.provable ? rep.provable : rep.unprovable)++;
    if (!v.provable) {
      std::size_t worlds = node_count(*v.saturated);
      std::size_t limit = node_count(ns) + v.boxr_expansions;
      if (worlds > limit)
        rep.violations.push_back({"model-size", text,
                                  "countermodel has " + std::to_string(worlds) +
                                      " worlds, limit " + std::to_string(limit)});
    }
  }
  return rep;
}

}  // namespace nsmb
