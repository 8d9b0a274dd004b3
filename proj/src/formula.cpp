#include "nsmb/formula.hpp"

namespace nsmb {

std::string dkind_str(Dkind d) {
  switch (d) {
    case Dkind::C: return "c";
    case Dkind::O: return "o";
    case Dkind::Eq: return "=";
  }
  return "?";
}

int cmp(const ModalIdx& a, const ModalIdx& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
  auto c = a.value <=> b.value;
  return c < 0 ? -1 : c > 0 ? 1 : 0;
}

std::string idx_str(const ModalIdx& idx) {
  return dkind_str(idx.kind) + "," + idx.value.str();
}

FormulaPtr mk_atom(std::string name) {
  return std::make_shared<Formula>(Formula{FKind::Atom, std::move(name), {}, nullptr, nullptr});
}
FormulaPtr mk_top() {
  static const FormulaPtr t = std::make_shared<Formula>(Formula{FKind::Top, "", {}, nullptr, nullptr});
  return t;
}
FormulaPtr mk_bot() {
  static const FormulaPtr b = std::make_shared<Formula>(Formula{FKind::Bot, "", {}, nullptr, nullptr});
  return b;
}
FormulaPtr mk_neg(FormulaPtr f) {
  return std::make_shared<Formula>(Formula{FKind::Neg, "", {}, std::move(f), nullptr});
}
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(Formula{FKind::And, "", {}, std::move(a), std::move(b)});
}
FormulaPtr mk_box(ModalIdx idx, FormulaPtr f) {
  return std::make_shared<Formula>(Formula{FKind::Box, "", idx, std::move(f), nullptr});
}

FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) {
  return mk_neg(mk_and(mk_neg(std::move(a)), mk_neg(std::move(b))));
}
FormulaPtr mk_imp(FormulaPtr a, FormulaPtr b) {
  return mk_or(mk_neg(std::move(a)), std::move(b));
}
FormulaPtr mk_diamond(ModalIdx idx, FormulaPtr f) {
  return mk_neg(mk_box(idx, mk_neg(std::move(f))));
}

int cmp(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return static_cast<int>(a->kind) < static_cast<int>(b->kind) ? -1 : 1;
  switch (a->kind) {
    case FKind::Atom:
      return a->name < b->name ? -1 : a->name > b->name ? 1 : 0;
    case FKind::Top:
    case FKind::Bot:
      return 0;
    case FKind::Neg:
      return cmp(a->lhs, b->lhs);
    case FKind::And: {
      int c = cmp(a->lhs, b->lhs);
      return c != 0 ? c : cmp(a->rhs, b->rhs);
    }
    case FKind::Box: {
      int c = cmp(a->idx, b->idx);
      return c != 0 ? c : cmp(a->lhs, b->lhs);
    }
  }
  return 0;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) { return cmp(a, b) == 0; }

void collect_subformulas(const FormulaPtr& f, FormulaSet& out) {
  if (!out.insert(f).second) return;
  if (f->lhs) collect_subformulas(f->lhs, out);
  if (f->rhs) collect_subformulas(f->rhs, out);
}

int modal_depth(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Atom:
    case FKind::Top:
    case FKind::Bot:
      return 0;
    case FKind::Neg:
      return modal_depth(f->lhs);
    case FKind::And:
      return std::max(modal_depth(f->lhs), modal_depth(f->rhs));
    case FKind::Box:
      return 1 + modal_depth(f->lhs);
  }
  return 0;
}

void collect_index_values(const FormulaPtr& f, std::set<Rat>& out) {
  if (f->kind == FKind::Box) out.insert(f->idx.value);
  if (f->lhs) collect_index_values(f->lhs, out);
  if (f->rhs) collect_index_values(f->rhs, out);
}

bool well_formed_for(const FormulaPtr& f, Logic mode) {
  if (f->kind == FKind::Box) {
    const ModalIdx& i = f->idx;
    if (!i.value.in_unit()) return false;
    if (mode == Logic::MB) {
      if (i.kind == Dkind::Eq) return false;
    } else {
      if (i.kind == Dkind::C && i.value != Rat(0)) return false;
      if (i.kind == Dkind::Eq && i.value == Rat(0)) return false;
    }
  }
  if (f->lhs && !well_formed_for(f->lhs, mode)) return false;
  if (f->rhs && !well_formed_for(f->rhs, mode)) return false;
  return true;
}

}  // namespace nsmb
