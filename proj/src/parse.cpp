#include "nsmb/parse.hpp"

#include <cctype>

namespace nsmb {

namespace {

class Parser {
 public:
  Parser(std::string_view text, Logic mode) : text_(text), mode_(mode) {}

  FormulaPtr formula_toplevel() {
    FormulaPtr f = imp();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

  NestedSequent ns_toplevel() {
    NestedSequent ns = nested();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return ns;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool try_consume(std::string_view s) {
    skip_ws();
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view s) {
    if (!try_consume(s)) fail("expected '" + std::string(s) + "'");
  }

  // "=>" must not be eaten as "=" (kind) and ">"; kinds only occur after
  // '[' or '<', so plain character checks suffice.
  Dkind kind() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected modal kind");
    char c = text_[pos_++];
    switch (c) {
      case 'c': return Dkind::C;
      case 'o': return Dkind::O;
      case '=':
        if (mode_ == Logic::MB) fail("kind '=' is not available in MB");
        return Dkind::Eq;
      default:
        --pos_;
        fail("expected modal kind 'c', 'o' or '='");
    }
  }

  Rat number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '.' || text_[pos_] == '/'))
      ++pos_;
    if (start == pos_) fail("expected number");
    try {
      return Rat::parse(text_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  ModalIdx modal_idx() {
    Dkind d = kind();
    expect(",");
    std::size_t numpos = pos_;
    Rat v = number();
    if (!v.in_unit()) {
      pos_ = numpos;
      fail("modal index out of range [0,1]");
    }
    if (mode_ == Logic::MBPlus) {
      if (d == Dkind::C && v != Rat(0)) {
        pos_ = numpos;
        fail("MB+ admits [c,a] only with a = 0");
      }
      if (d == Dkind::Eq && v == Rat(0)) {
        pos_ = numpos;
        fail("MB+ requires a > 0 in [=,a]");
      }
    }
    return {d, v};
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() ||
        !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      fail("expected formula");
    ++pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_' || text_[pos_] == '\''))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  FormulaPtr imp() {
    FormulaPtr lhs = disj();
    if (try_consume("->")) return mk_imp(lhs, imp());
    return lhs;
  }

  FormulaPtr disj() {
    FormulaPtr acc = conj();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '|') {
        ++pos_;
        acc = mk_or(acc, conj());
      } else {
        return acc;
      }
    }
  }

  FormulaPtr conj() {
    FormulaPtr acc = unary();
    while (try_consume("&")) acc = mk_and(acc, unary());
    return acc;
  }

  FormulaPtr unary() {
    char c = peek();
    if (c == '~') { ++pos_; return mk_neg(unary()); }
    if (c == '[') {
      ++pos_;
      ModalIdx idx = modal_idx();
      expect("]");
      return mk_box(idx, unary());
    }
    if (c == '<') {
      ++pos_;
      ModalIdx idx = modal_idx();
      expect(">");
      return mk_diamond(idx, unary());
    }
    if (c == '(') {
      ++pos_;
      FormulaPtr f = imp();
      expect(")");
      return f;
    }
    std::string name = ident();
    if (name == "T") return mk_top();
    if (name == "F") return mk_bot();
    return mk_atom(std::move(name));
  }

  // Formula list, possibly empty; stops at "=>", "{", ")" or end.
  FormulaSet flist() {
    FormulaSet out;
    char c = peek();
    if (c == '\0' || c == '{' || c == ')' ||
        (c == '=' && text_.substr(pos_, 2) == "=>"))
      return out;
    out.insert(imp());
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        out.insert(imp());
      } else {
        return out;
      }
    }
  }

  NestedSequent nested() {
    NestedSequent ns;
    ns.node.left = flist();
    expect("=>");
    ns.node.right = flist();
    if (try_consume("{")) {
      while (true) {
        expect("[");
        ModalIdx idx = modal_idx();
        if (idx.value == Rat(1)) fail("bracket index must differ from 1");
        expect("]");
        expect(":");
        expect("(");
        NestedSequent child = nested();
        expect(")");
        ns.children.emplace_back(idx, std::move(child));
        if (!try_consume(",")) break;
      }
      expect("}");
    }
    return ns;
  }

  std::string_view text_;
  Logic mode_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text, Logic mode) {
  return Parser(text, mode).formula_toplevel();
}

NestedSequent parse_ns(std::string_view text, Logic mode) {
  return Parser(text, mode).ns_toplevel();
}

}  // namespace nsmb
