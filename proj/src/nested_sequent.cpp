#include "nsmb/nested_sequent.hpp"

#include <algorithm>

namespace nsmb {

std::string path_str(const NodePath& p) {
  std::string s = "/";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(p[i]);
  }
  return s;
}

const NestedSequent* find_node(const NestedSequent& ns, const NodePath& path) {
  const NestedSequent* cur = &ns;
  for (std::size_t i : path) {
    if (i >= cur->children.size()) return nullptr;
    cur = &cur->children[i].second;
  }
  return cur;
}

NestedSequent* find_node(NestedSequent& ns, const NodePath& path) {
  return const_cast<NestedSequent*>(find_node(std::as_const(ns), path));
}

namespace {

void collect_nodes(const NestedSequent& ns, NodePath& path,
                   std::vector<std::pair<NodePath, const Sequent*>>& out) {
  out.emplace_back(path, &ns.node);
  for (std::size_t i = 0; i < ns.children.size(); ++i) {
    path.push_back(i);
    collect_nodes(ns.children[i].second, path, out);
    path.pop_back();
  }
}

void collect_indices(const NestedSequent& ns, std::set<Rat>& out) {
  for (const auto& f : ns.node.left) collect_index_values(f, out);
  for (const auto& f : ns.node.right) collect_index_values(f, out);
  for (const auto& [idx, child] : ns.children) {
    out.insert(idx.value);
    collect_indices(child, out);
  }
}

}  // namespace

std::vector<std::pair<NodePath, const Sequent*>> nodes(const NestedSequent& ns) {
  std::vector<std::pair<NodePath, const Sequent*>> out;
  NodePath path;
  collect_nodes(ns, path, out);
  return out;
}

std::size_t node_count(const NestedSequent& ns) {
  std::size_t n = 1;
  for (const auto& [idx, child] : ns.children) n += node_count(child);
  return n;
}

std::vector<Rat> index_set(const NestedSequent& ns) {
  std::set<Rat> vals;
  vals.insert(Rat(0));
  vals.insert(Rat(1));
  collect_indices(ns, vals);
  return {vals.begin(), vals.end()};
}

FormulaSet all_subformulas(const NestedSequent& ns) {
  FormulaSet out;
  for (const auto& [path, seq] : nodes(ns)) {
    for (const auto& f : seq->left) collect_subformulas(f, out);
    for (const auto& f : seq->right) collect_subformulas(f, out);
  }
  return out;
}

FormulaPtr tau(const NestedSequent& ns) {
  FormulaPtr conj;
  for (const auto& f : ns.node.left) conj = conj ? mk_and(conj, f) : f;
  if (!conj) conj = mk_top();
  FormulaPtr disj;
  for (const auto& f : ns.node.right) disj = disj ? mk_or(disj, f) : f;
  if (!disj) disj = mk_bot();
  FormulaPtr result = mk_imp(conj, disj);
  for (const auto& [idx, child] : ns.children)
    result = mk_or(result, mk_box(idx, tau(child)));
  return result;
}

namespace {

int cmp_set(const FormulaSet& a, const FormulaSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    int c = cmp(*ia, *ib);
    if (c != 0) return c;
  }
  if (ia != a.end()) return 1;
  if (ib != b.end()) return -1;
  return 0;
}

int cmp_child(const std::pair<ModalIdx, NestedSequent>& a,
              const std::pair<ModalIdx, NestedSequent>& b) {
  int c = cmp(a.first, b.first);
  return c != 0 ? c : cmp_ns(a.second, b.second);
}

}  // namespace

bool sequent_equal(const Sequent& a, const Sequent& b) {
  return cmp_set(a.left, b.left) == 0 && cmp_set(a.right, b.right) == 0;
}

int cmp_ns(const NestedSequent& a, const NestedSequent& b) {
  int c = cmp_set(a.node.left, b.node.left);
  if (c != 0) return c;
  c = cmp_set(a.node.right, b.node.right);
  if (c != 0) return c;
  if (a.children.size() != b.children.size())
    return a.children.size() < b.children.size() ? -1 : 1;
  // Multiset comparison: sort both child lists canonically.
  std::vector<const std::pair<ModalIdx, NestedSequent>*> ca, cb;
  for (const auto& ch : a.children) ca.push_back(&ch);
  for (const auto& ch : b.children) cb.push_back(&ch);
  auto less = [](const auto* x, const auto* y) { return cmp_child(*x, *y) < 0; };
  std::sort(ca.begin(), ca.end(), less);
  std::sort(cb.begin(), cb.end(), less);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    c = cmp_child(*ca[i], *cb[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool ns_equal(const NestedSequent& a, const NestedSequent& b) { return cmp_ns(a, b) == 0; }

bool ns_subsumes(const NestedSequent& small, const NestedSequent& big) {
  auto includes = [](const FormulaSet& s, const FormulaSet& t) {
    return std::includes(t.begin(), t.end(), s.begin(), s.end(), FormulaLess{});
  };
  if (!includes(small.node.left, big.node.left)) return false;
  if (!includes(small.node.right, big.node.right)) return false;
  if (small.children.size() > big.children.size()) return false;
  for (std::size_t i = 0; i < small.children.size(); ++i) {
    if (!(small.children[i].first == big.children[i].first)) return false;
    if (!ns_subsumes(small.children[i].second, big.children[i].second)) return false;
  }
  return true;
}

bool ns_well_formed(const NestedSequent& ns, Logic mode) {
  for (const auto& f : ns.node.left)
    if (!well_formed_for(f, mode)) return false;
  for (const auto& f : ns.node.right)
    if (!well_formed_for(f, mode)) return false;
  for (const auto& [idx, child] : ns.children) {
    if (idx.value == Rat(1) || !idx.value.in_unit()) return false;
    if (mode == Logic::MB && idx.kind == Dkind::Eq) return false;
    if (mode == Logic::MBPlus && idx.kind == Dkind::C && idx.value != Rat(0)) return false;
    if (mode == Logic::MBPlus && idx.kind == Dkind::Eq && idx.value == Rat(0)) return false;
    if (!ns_well_formed(child, mode)) return false;
  }
  return true;
}

}  // namespace nsmb
