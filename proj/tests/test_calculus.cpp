#include "doctest.h"
#include "nsmb/calculus.hpp"
#include "nsmb/parse.hpp"
#include "nsmb/prover.hpp"
#include "nsmb/semantics.hpp"

using namespace nsmb;

namespace {

std::vector<ModalIdx> sample_indices() {
  std::vector<ModalIdx> out;
  for (Dkind d : {Dkind::C, Dkind::O})
    for (const Rat& v : {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)})
      out.push_back({d, v});
  return out;
}

// Dense-enough probe grid: every index value above and a point strictly
// inside each gap, so strict and non-strict thresholds are told apart.
std::vector<Rat> probe_grid() {
  std::vector<Rat> g;
  for (int k = 0; k <= 8; ++k) g.emplace_back(k, 8);
  return g;
}

Proof axiom_id(NestedSequent concl, const NodePath& path, FormulaPtr witness) {
  return Proof{std::move(concl), RuleId::AxiomId, Focus{path, std::move(witness), {}, {}}, {}};
}

}  // namespace

TEST_CASE("the index-pair order matches threshold-set inclusion") {
  auto grid = probe_grid();
  for (const auto& a : sample_indices())
    for (const auto& b : sample_indices()) {
      bool included = true;
      for (const auto& v : grid)
        if (rel_matches(v, b) && !rel_matches(v, a)) included = false;
      CHECK(modal_precedes(a, b) == included);
    }
}

TEST_CASE("the index-pair order is reflexive and transitive") {
  auto idx = sample_indices();
  for (const auto& a : idx) CHECK(modal_precedes(a, a));
  for (const auto& a : idx)
    for (const auto& b : idx)
      for (const auto& c : idx)
        if (modal_precedes(a, b) && modal_precedes(b, c)) CHECK(modal_precedes(a, c));
}

TEST_CASE("exact-mode side condition (1): identical pairs and the listed clauses") {
  ModalIdx o14{Dkind::O, Rat(1, 4)}, o12{Dkind::O, Rat(1, 2)};
  ModalIdx e14{Dkind::Eq, Rat(1, 4)}, e12{Dkind::Eq, Rat(1, 2)};
  ModalIdx c0{Dkind::C, Rat(0)};
  CHECK(mbp_cond1(o12, o12));  // identical (o,o) pair is admissible
  CHECK(mbp_cond1(e12, e12));
  CHECK(mbp_cond1(o14, o12));
  CHECK(mbp_cond1(o14, e12));
  CHECK_FALSE(mbp_cond1(o12, o14));
  CHECK_FALSE(mbp_cond1(e14, o12));
  CHECK_FALSE(mbp_cond1(e14, e12));
  CHECK_FALSE(mbp_cond1(c0, o12));  // the universal box has its own rule
}

TEST_CASE("exact-mode side condition (2)") {
  CHECK(mbp_cond2({Dkind::Eq, Rat(1)}));
  CHECK(mbp_cond2({Dkind::O, Rat(1, 2)}));
  CHECK_FALSE(mbp_cond2({Dkind::O, Rat(1)}));
  CHECK_FALSE(mbp_cond2({Dkind::Eq, Rat(1, 2)}));
  CHECK_FALSE(mbp_cond2({Dkind::C, Rat(0)}));
}

TEST_CASE("rule names round-trip and classify correctly") {
  for (RuleId r : {RuleId::AxiomId, RuleId::AxiomTop, RuleId::AxiomBot, RuleId::AxiomBoxO1,
                   RuleId::Cut, RuleId::WL, RuleId::WR, RuleId::NegL, RuleId::NegR,
                   RuleId::AndL, RuleId::AndR, RuleId::BoxL, RuleId::BoxLSym,
                   RuleId::BoxLSelf, RuleId::BoxC0, RuleId::BoxR, RuleId::BoxRSelf,
                   RuleId::EqRSelf}) {
    auto back = rule_from_name(rule_name(r));
    REQUIRE(back.has_value());
    CHECK(*back == r);
    CHECK(rule_arity(r) == (rule_is_axiom(r) ? 0u
                            : (r == RuleId::Cut || r == RuleId::AndR) ? 2u : 1u));
  }
  CHECK_FALSE(rule_from_name("NoSuchRule").has_value());
}

TEST_CASE("axiom matching per node") {
  CHECK(is_axiom(parse_ns("p => p"), Logic::MB)->rule == RuleId::AxiomId);
  CHECK(is_axiom(parse_ns("=> T"), Logic::MB)->rule == RuleId::AxiomTop);
  CHECK(is_axiom(parse_ns("F =>"), Logic::MB)->rule == RuleId::AxiomBot);
  CHECK(is_axiom(parse_ns("=> [o,1]p"), Logic::MB)->rule == RuleId::AxiomBoxO1);
  CHECK_FALSE(is_axiom(parse_ns("p => q"), Logic::MB).has_value());
  // A match inside a bracket counts.
  auto m = is_axiom(parse_ns("=> q { [c,1/2]: ( p => p ) }"), Logic::MB);
  REQUIRE(m.has_value());
  CHECK(m->path == NodePath{0});
}

TEST_CASE("a hand-built derivation with Cut passes the checker") {
  FormulaPtr p = parse_formula("p");
  FormulaPtr pq = parse_formula("p & q");
  NestedSequent concl = parse_ns("p & q => p");

  // Cut on p & q. Left premise restores it on the right (closed by Id);
  // right premise re-adds it on the left (absorbed) and decomposes it.
  NestedSequent left_prem = with_right_added(concl, {}, pq);
  NestedSequent after_andl = with_left_added(with_left_added(concl, {}, p), {},
                                             parse_formula("q"));
  Proof andl{concl, RuleId::AndL, Focus{{}, pq, {}, {}},
             {axiom_id(after_andl, {}, p)}};
  Proof cut{concl, RuleId::Cut, Focus{{}, pq, {}, {}},
            {axiom_id(left_prem, {}, pq), andl}};

  CheckResult res = check_proof(cut, Logic::MB);
  INFO(res.message);
  CHECK(res.ok);
  CHECK(proof_uses_rule(cut, RuleId::Cut));
  CHECK(proof_rule_spine(cut) ==
        std::vector<RuleId>{RuleId::Cut, RuleId::AxiomId});
}

TEST_CASE("the checker rejects broken derivations") {
  FormulaPtr p = parse_formula("p");
  NestedSequent not_ax = parse_ns("p => q");
  CHECK_FALSE(check_proof(axiom_id(not_ax, {}, p), Logic::MB).ok);

  // Wrong premise for NegR.
  NestedSequent c = parse_ns("=> ~p");
  Proof bad{c, RuleId::NegR, Focus{{}, parse_formula("~p"), {}, {}},
            {axiom_id(parse_ns("q => q"), {}, parse_formula("q"))}};
  CHECK_FALSE(check_proof(bad, Logic::MB).ok);

  // BoxL against a bracket that fails side condition (1).
  NestedSequent bc = parse_ns("[c,3/4]p => { [c,1/2]: ( => q ) }");
  NestedSequent prem = with_left_added(bc, {0}, p);
  Proof badbox{bc, RuleId::BoxL, Focus{{}, parse_formula("[c,3/4]p"), 0, {}},
               {axiom_id(prem, {0}, p)}};
  CheckResult r = check_proof(badbox, Logic::MB);
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("side condition") != std::string::npos);

  // MB-only rule used in exact mode.
  NestedSequent sc = parse_ns("p => [c,1]p");
  NestedSequent sp = with_right_added(sc, {}, p);
  Proof self{sc, RuleId::BoxRSelf, Focus{{}, parse_formula("[c,1]p"), {}, {}},
             {axiom_id(sp, {}, p)}};
  CHECK(check_proof(self, Logic::MB).ok);
  CHECK_FALSE(check_proof(self, Logic::MBPlus).ok);
}

TEST_CASE("premises may keep or drop the principal formula") {
  NestedSequent c = parse_ns("~p, p =>");
  FormulaPtr np = parse_formula("~p");
  FormulaPtr p = parse_formula("p");
  NestedSequent keep = with_right_added(c, {}, p);
  NestedSequent drop = with_left_removed(keep, {}, np);
  Proof keep_proof{c, RuleId::NegL, Focus{{}, np, {}, {}}, {axiom_id(keep, {}, p)}};
  Proof drop_proof{c, RuleId::NegL, Focus{{}, np, {}, {}}, {axiom_id(drop, {}, p)}};
  CHECK(check_proof(keep_proof, Logic::MB).ok);
  CHECK(check_proof(drop_proof, Logic::MB).ok);
}

TEST_CASE("proof JSON round-trips and the checker still accepts") {
  Verdict v = prove(parse_ns("p => [c,1/2]<o,3/10>p"));
  REQUIRE(v.provable);
  REQUIRE(v.proof.has_value());
  Proof back = proof_from_json(proof_to_json(*v.proof), Logic::MB);
  CHECK(check_proof(back, Logic::MB).ok);
  CHECK(proof_rule_spine(back) == proof_rule_spine(*v.proof));
  CHECK(proof_size(back) == proof_size(*v.proof));
  CHECK(proof_to_latex(*v.proof).find("BoxR") != std::string::npos);
}

TEST_CASE("tree edits return modified copies") {
  NestedSequent ns = parse_ns("p => q");
  FormulaPtr r = parse_formula("r");
  NestedSequent grown = with_left_added(ns, {}, r);
  CHECK(grown.node.left.count(r));
  CHECK_FALSE(ns.node.left.count(r));
  CHECK(ns_equal(with_left_removed(grown, {}, r), ns));
  NestedSequent child;
  child.node.right.insert(r);
  NestedSequent with_child = with_child_added(ns, {}, {Dkind::C, Rat(1, 2)}, child);
  CHECK(node_count(with_child) == 2);
}
