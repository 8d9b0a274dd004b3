// Command-line front end: prove / countermodel / check / tau / eval / fuzz.
// Exit codes: 0 = provable (or true / accepted / clean), 1 = unprovable
// (or false / rejected / violations), 2 = usage or input error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nsmb/countermodel.hpp"
#include "nsmb/harness.hpp"
#include "nsmb/parse.hpp"
#include "nsmb/print.hpp"
#include "nsmb/prover.hpp"

namespace {

using namespace nsmb;

std::string slurp(const std::string& arg) {
  // An argument naming an existing file is read; anything else is taken
  // as inline text.
  if (std::filesystem::exists(arg) && std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Logic parse_logic(const std::string& s) {
  if (s == "mb") return Logic::MB;
  if (s == "mb+") return Logic::MBPlus;
  throw CLI::ValidationError("--logic", "expected mb or mb+");
}

std::vector<Rat> parse_indices(const std::vector<std::string>& items) {
  std::vector<Rat> out;
  for (const auto& s : items) out.push_back(Rat::parse(s));
  return out;
}

struct Common {
  std::string logic = "mb";
  std::string format = "text";
  std::vector<std::string> indices;
  std::size_t max_steps = 100000;
};

void add_common(CLI::App* cmd, Common& c, bool with_format = true) {
  cmd->add_option("--logic", c.logic, "mb or mb+")->check(CLI::IsMember({"mb", "mb+"}));
  if (with_format) cmd->add_option("--format", c.format, "text | json | dot | latex");
  cmd->add_option("--indices", c.indices,
                  "extra index values widening the inferred index set");
  cmd->add_option("--max-steps", c.max_steps, "hard step budget for proof search");
}

int cmd_prove(const std::string& input, const Common& c) {
  Logic mode = parse_logic(c.logic);
  NestedSequent ns = parse_ns(slurp(input), mode);
  Verdict v = prove(ns, {.mode = mode, .max_steps = c.max_steps});
  if (v.provable) {
    if (c.format == "json") {
      std::cout << proof_to_json(*v.proof) << "\n";
    } else if (c.format == "latex") {
      std::cout << proof_to_latex(*v.proof) << "\n";
    } else {
      std::cout << "provable (" << proof_size(*v.proof) << " rule applications, "
                << v.steps_used << "/" << v.step_bound << " steps)\n";
      for (RuleId r : proof_rule_spine(*v.proof)) std::cout << "  " << rule_name(r) << "\n";
    }
    return 0;
  }
  if (c.format == "json") {
    std::cout << "{\"provable\": false, \"saturated\": \"" << print_ns(*v.saturated)
              << "\",\n \"trace\": " << trace_to_json(v.trace) << "}\n";
  } else {
    std::cout << "unprovable; saturated: " << print_ns(*v.saturated) << "\n";
  }
  return 1;
}

int cmd_countermodel(const std::string& input, const Common& c) {
  Logic mode = parse_logic(c.logic);
  NestedSequent ns = parse_ns(slurp(input), mode);
  Verdict v = prove(ns, {.mode = mode, .max_steps = c.max_steps});
  if (v.provable) {
    std::cout << "input is provable; no countermodel exists\n";
    return 0;
  }
  CanonicalResult cr =
      canonical_model(ns, *v.saturated, mode, false, parse_indices(c.indices));
  if (!verify_countermodel(ns, cr, mode))
    throw std::runtime_error("countermodel failed verification; refusing to emit it");
  if (c.format == "json") {
    std::cout << countermodel_to_json(cr) << "\n";
  } else if (c.format == "dot") {
    std::cout << model_to_dot(cr.model) << "\n";
  } else {
    std::cout << "countermodel with " << cr.model.worlds.size() << " worlds (verified)\n";
    std::cout << model_to_json(cr.model) << "\n";
    for (const auto& [path, w] : cr.embedding)
      std::cout << "  node " << path_str(path) << " -> " << cr.model.worlds[w] << "\n";
  }
  return 0;
}

int cmd_check(const std::string& proof_file, const Common& c) {
  Logic mode = parse_logic(c.logic);
  Proof p = proof_from_json(read_file(proof_file), mode);
  CheckResult r = check_proof(p, mode);
  if (r.ok) {
    std::cout << "proof accepted (" << proof_size(p) << " rule applications)\n";
    return 0;
  }
  std::cout << "proof rejected: " << r.message << "\n";
  return 1;
}

int cmd_tau(const std::string& input, const Common& c) {
  Logic mode = parse_logic(c.logic);
  NestedSequent ns = parse_ns(slurp(input), mode);
  std::cout << print_formula(tau(ns)) << "\n";
  return 0;
}

int cmd_eval(const std::string& model_file, const std::string& formula, const Common& c) {
  Logic mode = parse_logic(c.logic);
  Model m = model_from_json(read_file(model_file));
  m.validate();
  FormulaPtr f = parse_formula(slurp(formula), mode);
  bool valid = formula_valid_in(m, f);
  std::cout << (valid ? "true" : "false") << "\n";
  return valid ? 0 : 1;
}

int cmd_fuzz(const FuzzConfig& cfg, const std::string& format,
             const std::vector<std::string>& suites) {
  std::vector<Report> reports;
  auto want = [&](const std::string& s) {
    return suites.empty() || std::find(suites.begin(), suites.end(), s) != suites.end();
  };
  if (want("soundness")) reports.push_back(soundness_suite(cfg));
  if (want("completeness")) reports.push_back(completeness_suite(cfg));
  if (want("tau")) reports.push_back(tau_suite(cfg));
  if (want("translation") && cfg.mode == Logic::MBPlus)
    reports.push_back(mbplus_translation_suite(cfg));
  if (want("bounds")) reports.push_back(bounds_suite(cfg));
  bool clean = true;
  if (format == "json") std::cout << "[\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    clean = clean && reports[i].clean();
    if (format == "json")
      std::cout << reports[i].to_json() << (i + 1 < reports.size() ? ",\n" : "\n");
    else
      std::cout << reports[i].to_text();
  }
  if (format == "json") std::cout << "]\n";
  return clean ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision procedure for the graded modal logics MB and MB+ "
               "via nested-sequent proof search"};
  app.require_subcommand(1);

  Common c;
  std::string input, model_file, formula, proof_file;

  auto* prove_cmd = app.add_subcommand("prove", "decide a formula or nested-sequent");
  prove_cmd->add_option("input", input, "inline text or a file path")->required();
  add_common(prove_cmd, c);

  auto* cm_cmd = app.add_subcommand("countermodel", "extract a verified countermodel");
  cm_cmd->add_option("input", input, "inline text or a file path")->required();
  add_common(cm_cmd, c);

  auto* check_cmd = app.add_subcommand("check", "verify a proof object (JSON)");
  check_cmd->add_option("proof", proof_file, "proof JSON file")->required();
  add_common(check_cmd, c, false);

  auto* tau_cmd = app.add_subcommand("tau", "formula interpretation of a nested-sequent");
  tau_cmd->add_option("input", input, "inline text or a file path")->required();
  add_common(tau_cmd, c, false);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula in a model (JSON)");
  eval_cmd->add_option("model", model_file, "model JSON file")->required();
  eval_cmd->add_option("formula", formula, "inline text or a file path")->required();
  add_common(eval_cmd, c, false);

  FuzzConfig fuzz;
  std::string fuzz_format = "text";
  std::vector<std::string> suites;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "run the randomized test suites");
  fuzz_cmd->add_option("--logic", c.logic, "mb or mb+")->check(CLI::IsMember({"mb", "mb+"}));
  fuzz_cmd->add_option("--format", fuzz_format, "text | json");
  fuzz_cmd->add_option("--seed", fuzz.seed, "RNG seed");
  fuzz_cmd->add_option("--count", fuzz.count, "cases per suite");
  fuzz_cmd->add_option("--models", fuzz.models_per_case, "random models per case");
  fuzz_cmd->add_option("--worlds", fuzz.model_worlds, "max worlds per random model");
  fuzz_cmd->add_option("--max-steps", fuzz.max_steps, "hard step budget per case");
  fuzz_cmd->add_option("--suite", suites, "subset of suites to run");
  fuzz_cmd->add_flag("--drop-side-condition-1", fuzz.drop_side_condition_1,
                     "mutation control: ignore the box-left side condition");
  fuzz_cmd->add_flag("--corrupt-suc", fuzz.corrupt_suc,
                     "mutation control: collapse the interpolated successor map");

  CLI11_PARSE(app, argc, argv);

  try {
    if (prove_cmd->parsed()) return cmd_prove(input, c);
    if (cm_cmd->parsed()) return cmd_countermodel(input, c);
    if (check_cmd->parsed()) return cmd_check(proof_file, c);
    if (tau_cmd->parsed()) return cmd_tau(input, c);
    if (eval_cmd->parsed()) return cmd_eval(model_file, formula, c);
    if (fuzz_cmd->parsed()) {
      fuzz.mode = parse_logic(c.logic);
      return cmd_fuzz(fuzz, fuzz_format, suites);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
