#include "nsmb/semantics.hpp"

#include <random>
#include <stdexcept>

namespace nsmb {

int Model::world_index(const std::string& name) const {
  for (std::size_t i = 0; i < worlds.size(); ++i)
    if (worlds[i] == name) return static_cast<int>(i);
  return -1;
}

void Model::validate() const {
  const std::size_t n = worlds.size();
  if (n == 0) throw std::invalid_argument("model has no worlds");
  if (rel.size() != n) throw std::invalid_argument("relation matrix size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (rel[i].size() != n) throw std::invalid_argument("relation matrix is not square");
    if (rel[i][i] != Rat(1)) throw std::invalid_argument("diagonal entry differs from 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (!rel[i][j].in_unit()) throw std::invalid_argument("relation value outside [0,1]");
      if (rel[i][j] != rel[j][i]) throw std::invalid_argument("relation is not symmetric");
      if (i != j && rel[i][j] == Rat(1))
        throw std::invalid_argument("off-diagonal relation value 1");
    }
  }
  for (const auto& [atom, ws] : val)
    for (int w : ws)
      if (w < 0 || static_cast<std::size_t>(w) >= n)
        throw std::invalid_argument("valuation refers to unknown world");
}

bool rel_matches(const Rat& value, const ModalIdx& idx) {
  switch (idx.kind) {
    case Dkind::C: return idx.value <= value;
    case Dkind::O: return idx.value < value;
    case Dkind::Eq: return idx.value == value;
  }
  return false;
}

bool eval(const Model& m, int world, const FormulaPtr& f) {
  if (world < 0 || static_cast<std::size_t>(world) >= m.worlds.size())
    throw std::invalid_argument("unknown world id");
  switch (f->kind) {
    case FKind::Atom: {
      auto it = m.val.find(f->name);
      return it != m.val.end() && it->second.count(world) > 0;
    }
    case FKind::Top: return true;
    case FKind::Bot: return false;
    case FKind::Neg: return !eval(m, world, f->lhs);
    case FKind::And: return eval(m, world, f->lhs) && eval(m, world, f->rhs);
    case FKind::Box:
      for (std::size_t t = 0; t < m.worlds.size(); ++t)
        if (rel_matches(m.rel[world][t], f->idx) && !eval(m, static_cast<int>(t), f->lhs))
          return false;
      return true;
  }
  return false;
}

bool formula_valid_in(const Model& m, const FormulaPtr& f) {
  for (std::size_t w = 0; w < m.worlds.size(); ++w)
    if (!eval(m, static_cast<int>(w), f)) return false;
  return true;
}

namespace {

int mapped_world(const Embedding& e, const NodePath& path) {
  auto it = e.find(path);
  if (it == e.end())
    throw std::invalid_argument("embedding is missing node " + path_str(path));
  return it->second;
}

bool edges_ok(const NestedSequent& ns, const Model& m, const Embedding& e, NodePath& path) {
  int parent = mapped_world(e, path);
  for (std::size_t i = 0; i < ns.children.size(); ++i) {
    path.push_back(i);
    int child = mapped_world(e, path);
    if (!rel_matches(m.rel[parent][child], ns.children[i].first)) {
      path.pop_back();
      return false;
    }
    if (!edges_ok(ns.children[i].second, m, e, path)) {
      path.pop_back();
      return false;
    }
    path.pop_back();
  }
  return true;
}

}  // namespace

bool check_embedding(const NestedSequent& ns, const Model& m, const Embedding& e) {
  NodePath path;
  mapped_world(e, path);  // root must be mapped even without edges
  return edges_ok(ns, m, e, path);
}

bool ns_false_under(const NestedSequent& ns, const Model& m, const Embedding& e) {
  for (const auto& [path, seq] : nodes(ns)) {
    int w = mapped_world(e, path);
    for (const auto& f : seq->left)
      if (!eval(m, w, f)) return false;
    for (const auto& f : seq->right)
      if (eval(m, w, f)) return false;
  }
  return true;
}

namespace {

// Backtracking enumeration in preorder; the edge constraint to the parent
// is checked as soon as a node is assigned.
bool search_falsifying(const std::vector<std::pair<NodePath, const Sequent*>>& order,
                       const NestedSequent& ns, const Model& m, std::size_t next,
                       Embedding& e) {
  if (next == order.size()) return ns_false_under(ns, m, e);
  const NodePath& path = order[next].first;
  for (std::size_t w = 0; w < m.worlds.size(); ++w) {
    if (!path.empty()) {
      NodePath parent(path.begin(), path.end() - 1);
      const NestedSequent* pnode = find_node(ns, parent);
      const ModalIdx& idx = pnode->children[path.back()].first;
      if (!rel_matches(m.rel[e.at(parent)][w], idx)) continue;
    }
    e[path] = static_cast<int>(w);
    if (search_falsifying(order, ns, m, next + 1, e)) return true;
    e.erase(path);
  }
  return false;
}

}  // namespace

bool find_falsifying_embedding(const NestedSequent& ns, const Model& m, Embedding& out) {
  auto order = nodes(ns);
  out.clear();
  return search_falsifying(order, ns, m, 0, out);
}

bool ns_valid_in(const NestedSequent& ns, const Model& m) {
  Embedding e;
  return !find_falsifying_embedding(ns, m, e);
}

Model random_model(std::uint64_t seed, int num_worlds, const std::vector<Rat>& value_pool,
                   const std::vector<std::string>& atoms) {
  if (value_pool.empty()) throw std::invalid_argument("empty value pool");
  if (num_worlds < 1) throw std::invalid_argument("need at least one world");

  std::vector<Rat> pool(value_pool);
  std::sort(pool.begin(), pool.end());
  std::vector<Rat> candidates;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (pool[i] < Rat(1)) candidates.push_back(pool[i]);
    if (i + 1 < pool.size()) {
      Rat mid = midpoint(pool[i], pool[i + 1]);
      if (mid < Rat(1)) candidates.push_back(mid);
    }
  }
  if (candidates.empty()) throw std::invalid_argument("value pool admits no off-diagonal value");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);

  Model m;
  for (int i = 0; i < num_worlds; ++i) m.worlds.push_back("w" + std::to_string(i));
  m.rel.assign(num_worlds, std::vector<Rat>(num_worlds, Rat(0)));
  for (int i = 0; i < num_worlds; ++i) {
    m.rel[i][i] = Rat(1);
    for (int j = i + 1; j < num_worlds; ++j) m.rel[i][j] = m.rel[j][i] = candidates[pick(rng)];
  }
  std::bernoulli_distribution coin(0.5);
  for (const auto& atom : atoms) {
    std::set<int>& ws = m.val[atom];
    for (int w = 0; w < num_worlds; ++w)
      if (coin(rng)) ws.insert(w);
  }
  m.validate();
  return m;
}

}  // namespace nsmb
