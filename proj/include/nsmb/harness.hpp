#ifndef NSMB_HARNESS_HPP
#define NSMB_HARNESS_HPP

#include <cstdint>
#include <random>

#include "nsmb/countermodel.hpp"
#include "nsmb/prover.hpp"

namespace nsmb {

struct FuzzConfig {
  std::uint64_t seed = 1;
  int count = 500;
  int max_formula_depth = 3;
  int max_tree_depth = 2;
  int atom_alphabet = 3;
  std::vector<Rat> index_pool = {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)};
  Logic mode = Logic::MB;
  int models_per_case = 25;
  int model_worlds = 4;  // upper bound; actual size drawn in [1, model_worlds]
  std::size_t max_steps = 100000;
  // Mutation controls: intentional bugs the suites must catch.
  bool drop_side_condition_1 = false;
  bool corrupt_suc = false;
};

using Rng = std::mt19937_64;

FormulaPtr random_formula(Rng& rng, const FuzzConfig& cfg, int depth);
NestedSequent random_ns(Rng& rng, const FuzzConfig& cfg);

struct Violation {
  std::string kind;
  std::string input;
  std::string detail;
};

struct Report {
  std::string suite;
  int total = 0;
  int provable = 0;
  int unprovable = 0;
  std::vector<Violation> violations;

  bool clean() const { return violations.empty(); }
  std::string to_json() const;
  std::string to_text() const;
};

// Every provable verdict must be true in every random finite model under
// every embedding (soundness).
Report soundness_suite(const FuzzConfig& cfg);

// Every unprovable verdict must yield a verified canonical countermodel
// (truth lemma + falsity of the input).
Report completeness_suite(const FuzzConfig& cfg);

// prove(ns) must agree with prove(=> tau(ns)), and per-model validity of
// ns must agree with validity of tau(ns).
Report tau_suite(const FuzzConfig& cfg);

// MB provability of F must agree with MB+ provability of F with every
// [c,a] (a > 0) rewritten as [o,a] & [=,a].
Report mbplus_translation_suite(const FuzzConfig& cfg);

// The rewrite used by the suite above.
FormulaPtr translate_c_to_mbplus(const FormulaPtr& f);

// Step-bound and countermodel-size bookkeeping over a batch
// (the decidability / finite-model-property check).
Report bounds_suite(const FuzzConfig& cfg);

}  // namespace nsmb

#endif
