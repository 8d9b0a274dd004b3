#include "doctest.h"
#include "nsmb/parse.hpp"
#include "nsmb/print.hpp"

using namespace nsmb;

namespace {
FormulaPtr pf(const char* s, Logic mode = Logic::MB) { return parse_formula(s, mode); }
}  // namespace

TEST_CASE("abbreviations expand to the primitive connectives") {
  // A | B = ~(~A & ~B)
  CHECK(equal(pf("p | q"), mk_neg(mk_and(mk_neg(mk_atom("p")), mk_neg(mk_atom("q"))))));
  // A -> B = ~A | B
  CHECK(equal(pf("p -> q"), mk_or(mk_neg(mk_atom("p")), mk_atom("q"))));
  // <d,a>A = ~[d,a]~A
  ModalIdx o3{Dkind::O, Rat(3, 10)};
  CHECK(equal(pf("<o,3/10>p"), mk_neg(mk_box(o3, mk_neg(mk_atom("p"))))));
}

TEST_CASE("precedence: unary binds tighter than & than | than ->") {
  CHECK(equal(pf("~p & q"), mk_and(mk_neg(mk_atom("p")), mk_atom("q"))));
  CHECK(equal(pf("p & q | r"), mk_or(mk_and(mk_atom("p"), mk_atom("q")), mk_atom("r"))));
  CHECK(equal(pf("p | q -> r"), mk_imp(mk_or(mk_atom("p"), mk_atom("q")), mk_atom("r"))));
  // -> is right-associative.
  CHECK(equal(pf("p -> q -> r"), mk_imp(mk_atom("p"), mk_imp(mk_atom("q"), mk_atom("r")))));
  CHECK(equal(pf("[c,1/2]p & q"), mk_and(pf("[c,1/2]p"), mk_atom("q"))));
}

TEST_CASE("decimals parse as exact fractions") {
  CHECK(pf("[c,0.5]p")->idx.value == Rat(1, 2));
  CHECK(pf("[o,0.3]p")->idx.value == Rat(3, 10));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(pf("p &"), ParseError);
  CHECK_THROWS_AS(pf("[x,1/2]p"), ParseError);
  CHECK_THROWS_AS(pf("(p"), ParseError);
  CHECK_THROWS_AS(pf(""), ParseError);
  try {
    pf("p & & q");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
}

TEST_CASE("mode admissibility of modal indices") {
  CHECK(well_formed_for(pf("[c,1/2]p"), Logic::MB));
  CHECK_FALSE(well_formed_for(pf("[c,1/2]p"), Logic::MBPlus));
  CHECK(well_formed_for(pf("[c,0]p"), Logic::MBPlus));  // universal modality survives
  CHECK(well_formed_for(pf("[o,1/2]p"), Logic::MBPlus));
  CHECK(well_formed_for(pf("[=,1/2]p", Logic::MBPlus), Logic::MBPlus));
  CHECK_FALSE(well_formed_for(pf("[=,1/2]p", Logic::MBPlus), Logic::MB));
  // The = kind is a parse error in MB mode.
  CHECK_THROWS_AS(pf("[=,1/2]p"), ParseError);
}

TEST_CASE("printing then parsing is the identity on the AST") {
  const char* samples[] = {
      "p",
      "~~p",
      "p & (q | r)",
      "p -> q -> r",
      "(p -> q) | [c,1/2](r -> s)",
      "<o,3/10>(p & ~q)",
      "[c,0][o,1/4]p -> <c,1/2>q",
      "T | F",
      "~(p | q) & ~(p -> q)",
  };
  for (const char* s : samples) {
    FormulaPtr f = pf(s);
    CHECK(equal(parse_formula(print_formula(f)), f));
  }
}

TEST_CASE("printer reconstructs abbreviations") {
  CHECK(print_formula(pf("p -> q")) == "p -> q");
  CHECK(print_formula(pf("p | q")) == "p | q");
  CHECK(print_formula(pf("<o,3/10>p")) == "<o,3/10>p");
  // An Or whose left disjunct is itself sugar must not be misread as Imp.
  CHECK(print_formula(pf("(p -> q) | [c,1/2](r -> s)")) == "(p -> q) | [c,1/2](r -> s)");
}

TEST_CASE("structural comparison is a total order with equality") {
  FormulaPtr a = pf("p & q");
  FormulaPtr b = pf("p | q");
  FormulaPtr a2 = pf("p & q");
  CHECK(cmp(a, a2) == 0);
  CHECK(equal(a, a2));
  CHECK(cmp(a, b) == -cmp(b, a));
  CHECK(cmp(a, b) != 0);
}

TEST_CASE("subformula collection includes the formula itself") {
  FormulaSet subs;
  collect_subformulas(pf("[c,1/2](p & q)"), subs);
  CHECK(subs.size() == 4);  // box, conjunction, p, q
  CHECK(subs.count(pf("p & q")));
  CHECK(subs.count(pf("p")));
}

TEST_CASE("modal depth counts nested boxes") {
  CHECK(modal_depth(pf("p & q")) == 0);
  CHECK(modal_depth(pf("[c,1/2]p")) == 1);
  CHECK(modal_depth(pf("[c,1/2]<o,1/4>p & [o,0]q")) == 2);
}

TEST_CASE("nested-sequent parsing and printing round-trip") {
  const char* samples[] = {
      "p => q",
      "=> p",
      "p, q =>",
      "p => q { [c,1/2]: ( r => s ) }",
      "=> { [o,1/4]: ( p => { [c,1/2]: ( => q ) } ), [c,3/4]: ( r => ) }",
  };
  for (const char* s : samples) {
    NestedSequent ns = parse_ns(s);
    CHECK(ns_equal(parse_ns(print_ns(ns)), ns));
  }
}

TEST_CASE("nested-sequent well-formedness rejects bracket index 1") {
  CHECK_THROWS_AS(parse_ns("p => { [c,1]: ( => q ) }"), ParseError);
  CHECK(ns_well_formed(parse_ns("p => { [c,1/2]: ( => q ) }"), Logic::MB));
}

TEST_CASE("tau translation of the worked example") {
  NestedSequent ns = parse_ns("p => q { [c,1/2]: ( r => s ) }");
  CHECK(print_formula(tau(ns)) == "(p -> q) | [c,1/2](r -> s)");
}

TEST_CASE("tau of empty sides uses the units") {
  CHECK(print_formula(tau(parse_ns("=>"))) == "T -> F");
  CHECK(print_formula(tau(parse_ns("=> p"))) == "T -> p");
}

TEST_CASE("node paths, counting and index sets") {
  NestedSequent ns =
      parse_ns("p => q { [c,1/2]: ( r => s { [o,1/4]: ( => p ) } ), [o,3/4]: ( => ) }");
  CHECK(node_count(ns) == 4);
  auto all = nodes(ns);
  REQUIRE(all.size() == 4);
  CHECK(all[0].first.empty());
  CHECK(all[1].first == NodePath{0});
  CHECK(all[2].first == (NodePath{0, 0}));
  CHECK(all[3].first == NodePath{1});
  CHECK(find_node(ns, {0, 0}) != nullptr);
  CHECK(find_node(ns, {2}) == nullptr);
  std::vector<Rat> idx = index_set(ns);
  CHECK(idx == std::vector<Rat>{Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)});
}

TEST_CASE("nested-sequent equality ignores child order") {
  NestedSequent a = parse_ns("p => { [c,1/2]: ( q => ) , [o,1/4]: ( => r ) }");
  NestedSequent b = parse_ns("p => { [o,1/4]: ( => r ) , [c,1/2]: ( q => ) }");
  CHECK(ns_equal(a, b));
  CHECK_FALSE(ns_equal(a, parse_ns("p => { [c,1/2]: ( q => ) }")));
}
