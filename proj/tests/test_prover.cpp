#include "doctest.h"
#include "nsmb/parse.hpp"
#include "nsmb/prover.hpp"

using namespace nsmb;

namespace {

Verdict run(const char* text, Logic mode = Logic::MB) {
  ProverOptions opts;
  opts.mode = mode;
  return prove(parse_ns(text, mode), opts);
}

}  // namespace

TEST_CASE("worked example: exact minimal derivation") {
  Verdict v = run("p => [c,1/2]<o,3/10>p");
  REQUIRE(v.provable);
  REQUIRE(v.proof.has_value());
  CHECK(proof_rule_spine(*v.proof) ==
        std::vector<RuleId>{RuleId::BoxR, RuleId::NegR, RuleId::BoxLSym, RuleId::NegL,
                            RuleId::AxiomId});
  CHECK(check_proof(*v.proof, Logic::MB).ok);
  CHECK_FALSE(proof_uses_rule(*v.proof, RuleId::Cut));
}

TEST_CASE("provable battery") {
  const char* provable_mb[] = {
      "=> [o,1]p",
      "[c,0]p => p",
      "[c,1/2]p => p",
      "[c,1]p => p",
      "p => [c,1]p",
      "p => [c,1/2]<c,1/2>p",
      "[c,1/2]p => [c,7/10]p",
      "[c,1/2](p & q) => [c,1/2]p",
      "=> p -> p",
      "=> T",
      "F => q",
      "p & q => q & p",
      "[o,1/2]p & [o,1/2]q => [o,1/2](p & q)",
  };
  for (const char* s : provable_mb) {
    CAPTURE(s);
    Verdict v = run(s);
    CHECK(v.provable);
    if (v.proof) CHECK(check_proof(*v.proof, Logic::MB).ok);
  }
}

TEST_CASE("unprovable battery with saturated open branches") {
  const char* unprovable_mb[] = {
      "=> p",
      "[c,7/10]p => [c,1/2]p",
      "p => [c,1/2]p",
      "p | q => p & q",
      "[o,1/2]p => [c,1/2]p",
      "=> [o,1/10]p",
  };
  for (const char* s : unprovable_mb) {
    CAPTURE(s);
    Verdict v = run(s);
    CHECK_FALSE(v.provable);
    CHECK(v.saturated.has_value());
  }
}

TEST_CASE("verdicts in exact mode") {
  CHECK(run("=> [=,1]p -> p", Logic::MBPlus).provable);
  CHECK(run("[o,1/2](p & q) => [o,1/2](q & p)", Logic::MBPlus).provable);
  CHECK(run("[c,0]p => p", Logic::MBPlus).provable);
  CHECK_FALSE(run("[=,1/2]p => [=,7/10]p", Logic::MBPlus).provable);
  CHECK_FALSE(run("[o,1/2]p => [=,1/2]p", Logic::MBPlus).provable);
}

TEST_CASE("search stays within the computed step bound") {
  const char* cases[] = {
      "p => [c,1/2]<o,3/10>p",
      "[c,7/10]p => [c,1/2]p",
      "p & q => q & p",
      "=> [o,1/10]p",
  };
  for (const char* s : cases) {
    CAPTURE(s);
    Verdict v = run(s);
    CHECK(v.step_bound > 0);
    CHECK(v.steps_used <= v.step_bound);
  }
}

TEST_CASE("the universal modality terminates via ancestor blocking") {
  // Without blocking this input spawns an unbounded chain of children.
  Verdict v = run("[c,0]~[o,0]~(p -> q) => r");
  CHECK(v.steps_used > 0);
  CHECK(v.steps_used <= v.step_bound);
  if (!v.provable) CHECK(v.saturated.has_value());
}

TEST_CASE("max_steps guard throws instead of diverging") {
  ProverOptions opts;
  opts.max_steps = 2;
  CHECK_THROWS(prove(parse_ns("p & q & r => [c,1/2](p & q)"), opts));
}

TEST_CASE("formula-level provability agrees with the root sequent form") {
  FormulaPtr f = parse_formula("[c,1/2]p -> p");
  CHECK(provable(f, Logic::MB));
  NestedSequent ns;
  ns.node.right.insert(f);
  CHECK(prove(ns).provable);
  CHECK_FALSE(provable(parse_formula("p -> [c,1/2]p"), Logic::MB));
}

TEST_CASE("saturation step instances respect the mode") {
  // [o,1] on the left never self-instantiates in MB (condition on step 7).
  Verdict v = run("[o,1]p => p");
  CHECK_FALSE(v.provable);
  // In exact mode [=,1] does self-instantiate.
  CHECK(run("[=,1]p => p", Logic::MBPlus).provable);
  CHECK_FALSE(run("[=,1/2]p => p", Logic::MBPlus).provable);
}

TEST_CASE("dropping side condition (1) proves an invalid sequent") {
  // [c,7/10]p => [c,1/2]p is invalid; the mutated prover closes it.
  ProverOptions opts;
  opts.drop_side_condition_1 = true;
  Verdict v = prove(parse_ns("[c,7/10]p => [c,1/2]p"), opts);
  CHECK(v.provable);
  // The produced proof cannot pass the honest checker.
  if (v.proof) CHECK_FALSE(check_proof(*v.proof, Logic::MB).ok);
}

TEST_CASE("the open-branch trace serializes") {
  Verdict v = run("=> [o,1/10]p");
  REQUIRE_FALSE(v.provable);
  std::string j = trace_to_json(v.trace);
  CHECK(j.find("\"step\"") != std::string::npos);
}
