#include "nsmb/countermodel.hpp"

#include <stdexcept>

#include "json.hpp"
#include "nsmb/prover.hpp"

namespace nsmb {

Rat InterpSet::suc(const Rat& v) const {
  for (std::size_t i = 0; i < full.size(); ++i)
    if (full[i] == v) return i + 1 < full.size() ? full[i + 1] : v;  // Suc(1) = 1
  throw std::invalid_argument("value not in interpolated set: " + v.str());
}

InterpSet interpolate(std::vector<Rat> base, bool corrupt_suc) {
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  if (base.empty() || base.front() != Rat(0) || base.back() != Rat(1))
    throw std::invalid_argument("index set must contain 0 and 1");
  InterpSet out;
  out.base = base;
  for (std::size_t i = 0; i < base.size(); ++i) {
    out.full.push_back(base[i]);
    if (i + 1 < base.size()) out.full.push_back(midpoint(base[i], base[i + 1]));
  }
  if (corrupt_suc) {
    // Mutation control: collapse suc to the identity by dropping the
    // interpolated points.
    out.full = out.base;
  }
  return out;
}

bool is_interpolated_set(const std::vector<Rat>& base, const std::vector<Rat>& candidate) {
  // Clause 1: base is contained in the candidate.
  for (const auto& b : base)
    if (std::find(candidate.begin(), candidate.end(), b) == candidate.end()) return false;
  // Clause 2: exactly one candidate value strictly inside each gap
  // between consecutive base elements.
  std::vector<Rat> sorted_base = base;
  std::sort(sorted_base.begin(), sorted_base.end());
  for (std::size_t i = 0; i + 1 < sorted_base.size(); ++i) {
    const Rat& lo = sorted_base[i];
    const Rat& hi = sorted_base[i + 1];
    if (lo == hi) continue;
    int inside = 0;
    for (const auto& v : candidate)
      if (lo < v && v < hi) ++inside;
    if (inside != 1) return false;
  }
  return true;
}

CanonicalResult canonical_model(const NestedSequent& original, const NestedSequent& saturated,
                                Logic mode, bool corrupt_suc,
                                const std::vector<Rat>& extra_indices) {
  if (is_axiom(saturated, mode))
    throw std::invalid_argument("canonical model requested for an axiomatic nested-sequent");
  SearchState probe{saturated, {}, {}};
  // Step 8 instances are keyed off the bookkeeping set, which a finished
  // search has populated; rebuild it from the existing brackets.
  for (const auto& [path, seq] : nodes(saturated)) {
    const NestedSequent* node = find_node(saturated, path);
    for (const auto& f : seq->right)
      if (f->kind == FKind::Box && f->idx.value != Rat(1))
        for (const auto& [idx, child] : node->children)
          if (idx == f->idx && child.node.right.count(f->lhs)) {
            probe.expanded_boxr.insert({path, f});
            break;
          }
  }
  if (!saturation_steps(probe, mode).empty())
    throw std::invalid_argument("nested-sequent is not saturated");

  std::vector<Rat> base = index_set(saturated);
  for (const auto& v : extra_indices) {
    if (!v.in_unit()) throw std::invalid_argument("index outside [0,1]: " + v.str());
    base.push_back(v);
  }
  InterpSet interp = interpolate(std::move(base), corrupt_suc);

  CanonicalResult cr;
  cr.saturated = saturated;
  auto all = nodes(saturated);
  const std::size_t n = all.size();
  Model& m = cr.model;
  for (std::size_t i = 0; i < n; ++i) {
    m.worlds.push_back("w" + std::to_string(i));
    cr.world_of[all[i].first] = static_cast<int>(i);
  }
  m.rel.assign(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m.rel[i][i] = Rat(1);
  for (const auto& [path, seq] : all) {
    const NestedSequent* node = find_node(saturated, path);
    int pw = cr.world_of.at(path);
    for (std::size_t j = 0; j < node->children.size(); ++j) {
      NodePath child_path = path;
      child_path.push_back(j);
      int cw = cr.world_of.at(child_path);
      const ModalIdx& idx = node->children[j].first;
      Rat value = idx.kind == Dkind::O ? interp.suc(idx.value) : idx.value;
      m.rel[pw][cw] = m.rel[cw][pw] = value;  // a tree edge visits each pair once
    }
    for (const auto& f : seq->left)
      if (f->kind == FKind::Atom) m.val[f->name].insert(pw);
  }

  // A node blocked from expanding a right box (its sequent equals a proper
  // ancestor's) has no witness child of its own; it borrows the ancestor's.
  // Content equality makes the extra symmetric edge safe: the box-left
  // saturation between the ancestor and its child transfers verbatim.
  for (const auto& [path, seq] : all) {
    const NestedSequent* node = find_node(saturated, path);
    int mw = cr.world_of.at(path);
    for (const auto& f : seq->right) {
      if (f->kind != FKind::Box || f->idx.value == Rat(1)) continue;
      bool witnessed = false;
      for (const auto& [tpath, tseq] : all) {
        int tw = cr.world_of.at(tpath);
        if (rel_matches(m.rel[mw][tw], f->idx) && tseq->right.count(f->lhs)) {
          witnessed = true;
          break;
        }
      }
      if (witnessed) continue;
      Rat v = f->idx.kind == Dkind::O ? interp.suc(f->idx.value) : f->idx.value;
      // Walk the ancestors with equal content, looking for one that
      // expanded this box into a child we can link to.
      const NestedSequent* anc = &saturated;
      NodePath anc_path;
      for (std::size_t i = 0; i <= path.size() && !witnessed; ++i) {
        if (sequent_equal(anc->node, *seq)) {
          for (std::size_t j = 0; j < anc->children.size(); ++j) {
            if (!(anc->children[j].first == f->idx)) continue;
            if (!anc->children[j].second.node.right.count(f->lhs)) continue;
            NodePath cpath = anc_path;
            cpath.push_back(j);
            int cw = cr.world_of.at(cpath);
            if (cw == mw) continue;
            if (m.rel[mw][cw] == Rat(0)) {
              m.rel[mw][cw] = m.rel[cw][mw] = v;
              witnessed = true;
              break;
            }
            if (rel_matches(m.rel[mw][cw], f->idx)) {
              witnessed = true;
              break;
            }
          }
        }
        if (i < path.size()) {
          anc_path.push_back(path[i]);
          anc = &anc->children[path[i]].second;
        }
      }
      if (!witnessed)
        throw std::logic_error("blocked right box has no canonical witness: " +
                               path_str(path));
    }
  }

  if (!corrupt_suc) {
    m.validate();
    // An = bracket keeps its own value; interpolated points are never in
    // the base, so no suc image of a base element can collide with it.
    for (const auto& [path, seq] : all) {
      const NestedSequent* node = find_node(saturated, path);
      for (const auto& [idx, child] : node->children)
        if (idx.kind == Dkind::Eq &&
            std::find(interp.base.begin(), interp.base.end(), idx.value) == interp.base.end())
          throw std::logic_error("= bracket value escaped the base index set");
    }
  }
  for (const auto& [path, seq] : nodes(original)) cr.embedding[path] = cr.world_of.at(path);
  return cr;
}

bool verify_countermodel(const NestedSequent& original, const CanonicalResult& cr, Logic mode) {
  (void)mode;
  // Truth lemma over the saturated tree.
  for (const auto& [path, seq] : nodes(cr.saturated)) {
    int w = cr.world_of.at(path);
    for (const auto& f : seq->left)
      if (!eval(cr.model, w, f)) return false;
    for (const auto& f : seq->right)
      if (eval(cr.model, w, f)) return false;
  }
  if (!check_embedding(original, cr.model, cr.embedding)) return false;
  return ns_false_under(original, cr.model, cr.embedding);
}

std::string countermodel_to_json(const CanonicalResult& cr) {
  nlohmann::json j = nlohmann::json::parse(model_to_json(cr.model));
  nlohmann::json emb = nlohmann::json::object();
  for (const auto& [path, w] : cr.embedding) emb[path_str(path)] = cr.model.worlds[w];
  j["embedding"] = std::move(emb);
  return j.dump(2);
}

}  // namespace nsmb
