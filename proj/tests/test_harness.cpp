#include "doctest.h"
#include "nsmb/harness.hpp"
#include "nsmb/parse.hpp"
#include "nsmb/print.hpp"

using namespace nsmb;

namespace {

FuzzConfig small_cfg(Logic mode = Logic::MB) {
  FuzzConfig cfg;
  cfg.count = 40;
  cfg.models_per_case = 8;
  cfg.mode = mode;
  return cfg;
}

}  // namespace

TEST_CASE("random generation is reproducible and well formed") {
  FuzzConfig cfg = small_cfg();
  Rng a(5), b(5);
  for (int i = 0; i < 50; ++i) {
    NestedSequent x = random_ns(a, cfg);
    NestedSequent y = random_ns(b, cfg);
    CHECK(ns_equal(x, y));
    CHECK(ns_well_formed(x, Logic::MB));
    // Round-trip through the printer.
    CHECK(ns_equal(parse_ns(print_ns(x)), x));
  }
  FuzzConfig plus = small_cfg(Logic::MBPlus);
  Rng c(5);
  for (int i = 0; i < 50; ++i) CHECK(ns_well_formed(random_ns(c, plus), Logic::MBPlus));
}

TEST_CASE("random formulas respect the depth and index pool") {
  FuzzConfig cfg = small_cfg();
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    FormulaPtr f = random_formula(rng, cfg, cfg.max_formula_depth);
    CHECK(modal_depth(f) <= cfg.max_formula_depth);
    std::set<Rat> vals;
    collect_index_values(f, vals);
    for (const Rat& v : vals)
      CHECK(std::find(cfg.index_pool.begin(), cfg.index_pool.end(), v) !=
            cfg.index_pool.end());
  }
}

TEST_CASE("soundness suite runs clean on a small batch") {
  Report r = soundness_suite(small_cfg());
  CHECK(r.total == 40);
  CHECK(r.provable + r.unprovable == r.total);
  INFO(r.to_text());
  CHECK(r.clean());
}

TEST_CASE("completeness suite runs clean on a small batch") {
  Report r = completeness_suite(small_cfg());
  INFO(r.to_text());
  CHECK(r.clean());
}

TEST_CASE("tau suite runs clean on a small batch") {
  Report r = tau_suite(small_cfg());
  INFO(r.to_text());
  CHECK(r.clean());
}

TEST_CASE("bounds suite runs clean on a small batch") {
  Report r = bounds_suite(small_cfg());
  INFO(r.to_text());
  CHECK(r.clean());
}

TEST_CASE("exact-mode suites run clean on a small batch") {
  FuzzConfig cfg = small_cfg(Logic::MBPlus);
  CHECK(soundness_suite(cfg).clean());
  CHECK(completeness_suite(cfg).clean());
  CHECK(tau_suite(cfg).clean());
  CHECK(bounds_suite(cfg).clean());
  CHECK(mbplus_translation_suite(cfg).clean());
}

TEST_CASE("the threshold-to-exact rewrite preserves truth pointwise") {
  FormulaPtr f = parse_formula("[c,1/2](p -> [c,3/4]q) & <c,1/4>p");
  FormulaPtr t = translate_c_to_mbplus(f);
  CHECK(well_formed_for(t, Logic::MBPlus));
  std::vector<Rat> pool = {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Model m = random_model(seed, 4, pool, {"p", "q"});
    for (std::size_t w = 0; w < m.worlds.size(); ++w)
      CHECK(eval(m, static_cast<int>(w), f) == eval(m, static_cast<int>(w), t));
  }
  // The universal [c,0] box is kept as-is.
  CHECK(equal(translate_c_to_mbplus(parse_formula("[c,0]p")), parse_formula("[c,0]p")));
}

TEST_CASE("reports serialize to JSON and text") {
  Report r = soundness_suite(small_cfg());
  CHECK(r.to_json().find("\"suite\"") != std::string::npos);
  CHECK(r.to_text().find("soundness") != std::string::npos);
}

TEST_CASE("suite results are reproducible for a fixed seed") {
  Report a = soundness_suite(small_cfg());
  Report b = soundness_suite(small_cfg());
  CHECK(a.to_json() == b.to_json());
}
