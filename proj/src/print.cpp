#include "nsmb/print.hpp"

namespace nsmb {

namespace {

// Precedence levels: -> 0, | 1, & 2, unary/atoms 3.
constexpr int kImp = 0, kOr = 1, kAnd = 2, kUnary = 3;

// A | B is stored as ~(~A & ~B); A -> B as ~A | B.
bool is_or(const FormulaPtr& f, FormulaPtr& a, FormulaPtr& b) {
  if (f->kind != FKind::Neg) return false;
  const FormulaPtr& body = f->lhs;
  if (body->kind != FKind::And) return false;
  if (body->lhs->kind != FKind::Neg || body->rhs->kind != FKind::Neg) return false;
  a = body->lhs->lhs;
  b = body->rhs->lhs;
  return true;
}

bool is_diamond(const FormulaPtr& f, ModalIdx& idx, FormulaPtr& a) {
  if (f->kind != FKind::Neg) return false;
  const FormulaPtr& body = f->lhs;
  if (body->kind != FKind::Box) return false;
  if (body->lhs->kind != FKind::Neg) return false;
  idx = body->idx;
  a = body->lhs->lhs;
  return true;
}

// A -> B is A' | B with A' a plain negation ~A; when A' is itself sugar
// (an Or, Imp or diamond that merely encodes to a Neg node) the Or reading
// gives the shorter, intended print.
bool is_imp(const FormulaPtr& f, FormulaPtr& a, FormulaPtr& b) {
  FormulaPtr l, r, x, y;
  ModalIdx idx;
  if (!is_or(f, l, r)) return false;
  if (l->kind != FKind::Neg) return false;
  if (is_or(l, x, y) || is_diamond(l, idx, x)) return false;
  a = l->lhs;
  b = r;
  return true;
}

void print(const FormulaPtr& f, int min_prec, std::string& out) {
  FormulaPtr a, b;
  ModalIdx idx;
  if (is_imp(f, a, b)) {
    bool paren = kImp < min_prec;
    if (paren) out += "(";
    print(a, kOr, out);
    out += " -> ";
    print(b, kImp, out);
    if (paren) out += ")";
    return;
  }
  if (is_or(f, a, b)) {
    bool paren = kOr < min_prec;
    if (paren) out += "(";
    print(a, kOr, out);
    out += " | ";
    print(b, kAnd, out);
    if (paren) out += ")";
    return;
  }
  if (is_diamond(f, idx, a)) {
    out += "<" + idx_str(idx) + ">";
    print(a, kUnary, out);
    return;
  }
  switch (f->kind) {
    case FKind::Atom: out += f->name; return;
    case FKind::Top: out += "T"; return;
    case FKind::Bot: out += "F"; return;
    case FKind::Neg:
      out += "~";
      print(f->lhs, kUnary, out);
      return;
    case FKind::And: {
      bool paren = kAnd < min_prec;
      if (paren) out += "(";
      print(f->lhs, kAnd, out);
      out += " & ";
      print(f->rhs, kUnary, out);
      if (paren) out += ")";
      return;
    }
    case FKind::Box:
      out += "[" + idx_str(f->idx) + "]";
      print(f->lhs, kUnary, out);
      return;
  }
}

void print_set(const FormulaSet& s, std::string& out) {
  bool first = true;
  for (const auto& f : s) {
    if (!first) out += ", ";
    first = false;
    print(f, kImp, out);
  }
}

void print_tree(const NestedSequent& ns, std::string& out) {
  print_set(ns.node.left, out);
  if (!ns.node.left.empty()) out += " ";
  out += "=>";
  if (!ns.node.right.empty()) out += " ";
  print_set(ns.node.right, out);
  if (!ns.children.empty()) {
    out += " { ";
    bool first = true;
    for (const auto& [idx, child] : ns.children) {
      if (!first) out += ", ";
      first = false;
      out += "[" + idx_str(idx) + "]: ( ";
      print_tree(child, out);
      out += " )";
    }
    out += " }";
  }
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
  std::string out;
  print(f, kImp, out);
  return out;
}

std::string print_ns(const NestedSequent& ns) {
  std::string out;
  print_tree(ns, out);
  return out;
}

}  // namespace nsmb
