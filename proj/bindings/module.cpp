#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nsmb/harness.hpp"
#include "nsmb/parse.hpp"
#include "nsmb/print.hpp"

namespace py = pybind11;
using namespace nsmb;

namespace {

Logic logic_from(const std::string& name) {
  if (name == "mb") return Logic::MB;
  if (name == "mb+") return Logic::MBPlus;
  throw std::invalid_argument("unknown logic: " + name + " (expected 'mb' or 'mb+')");
}

py::dict prove_py(const std::string& text, const std::string& logic, std::size_t max_steps) {
  Logic mode = logic_from(logic);
  NestedSequent ns = parse_ns(text, mode);
  ProverOptions opts;
  opts.mode = mode;
  if (max_steps) opts.max_steps = max_steps;
  Verdict v = prove(ns, opts);
  py::dict out;
  out["provable"] = v.provable;
  out["steps_used"] = v.steps_used;
  out["step_bound"] = v.step_bound;
  out["proof"] = v.proof ? py::object(py::str(proof_to_json(*v.proof))) : py::none();
  if (!v.provable) {
    CanonicalResult cr = canonical_model(ns, *v.saturated, mode);
    if (!verify_countermodel(ns, cr, mode))
      throw std::logic_error("internal error: countermodel failed verification");
    out["countermodel"] = countermodel_to_json(cr);
  } else {
    out["countermodel"] = py::none();
  }
  return out;
}

py::dict check_py(const std::string& proof_json, const std::string& logic) {
  Proof p = proof_from_json(proof_json, logic_from(logic));
  CheckResult r = check_proof(p, logic_from(logic));
  py::dict out;
  out["ok"] = r.ok;
  out["message"] = r.message;
  return out;
}

std::string tau_py(const std::string& text, const std::string& logic) {
  return print_formula(tau(parse_ns(text, logic_from(logic))));
}

bool eval_py(const std::string& model_json, const std::string& formula,
             const std::string& logic) {
  Model m = model_from_json(model_json);
  m.validate();
  return formula_valid_in(m, parse_formula(formula, logic_from(logic)));
}

std::string fuzz_py(const std::string& suite, const std::string& logic, std::uint64_t seed,
                    int count, int models, int worlds) {
  FuzzConfig cfg;
  cfg.mode = logic_from(logic);
  cfg.seed = seed;
  cfg.count = count;
  cfg.models_per_case = models;
  cfg.model_worlds = worlds;
  Report r;
  if (suite == "soundness") r = soundness_suite(cfg);
  else if (suite == "completeness") r = completeness_suite(cfg);
  else if (suite == "tau") r = tau_suite(cfg);
  else if (suite == "bounds") r = bounds_suite(cfg);
  else if (suite == "translation") r = mbplus_translation_suite(cfg);
  else throw std::invalid_argument("unknown suite: " + suite);
  return r.to_json();
}

}  // namespace

PYBIND11_MODULE(_nsmb, m) {
  m.doc() = "Decision procedure for graded modal logics over symmetric "
            "weighted frames, via nested-sequent proof search";
  m.def("prove", &prove_py, py::arg("sequent"), py::arg("logic") = "mb",
        py::arg("max_steps") = 0,
        "Decide a nested-sequent; returns provable flag, proof JSON or a "
        "verified countermodel JSON");
  m.def("check", &check_py, py::arg("proof_json"), py::arg("logic") = "mb",
        "Re-verify a proof object against the calculus");
  m.def("tau", &tau_py, py::arg("sequent"), py::arg("logic") = "mb",
        "Formula translation of a nested-sequent");
  m.def("eval", &eval_py, py::arg("model_json"), py::arg("formula"),
        py::arg("logic") = "mb", "Validity of a formula in a finite model");
  m.def("fuzz", &fuzz_py, py::arg("suite"), py::arg("logic") = "mb",
        py::arg("seed") = 1, py::arg("count") = 100, py::arg("models") = 10,
        py::arg("worlds") = 4, "Run a randomized self-check suite; returns a JSON report");
}
