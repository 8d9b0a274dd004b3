#include <stdexcept>

#include "json.hpp"
#include "nsmb/calculus.hpp"
#include "nsmb/parse.hpp"
#include "nsmb/print.hpp"

namespace nsmb {

using nlohmann::json;

namespace {

json focus_to_json(const Focus& f) {
  json j;
  j["path"] = f.path;
  if (f.formula) j["formula"] = print_formula(f.formula);
  if (f.child) j["child"] = *f.child;
  if (f.target) j["target"] = *f.target;
  return j;
}

json proof_to_json_obj(const Proof& p) {
  json j;
  j["rule"] = rule_name(p.rule);
  j["conclusion"] = print_ns(p.conclusion);
  j["focus"] = focus_to_json(p.focus);
  json prems = json::array();
  for (const auto& prem : p.premises) prems.push_back(proof_to_json_obj(prem));
  j["premises"] = std::move(prems);
  return j;
}

Proof proof_from_json_obj(const json& j, Logic mode) {
  Proof p;
  auto rule = rule_from_name(j.at("rule").get<std::string>());
  if (!rule) throw std::invalid_argument("unknown rule name: " + j.at("rule").get<std::string>());
  p.rule = *rule;
  p.conclusion = parse_ns(j.at("conclusion").get<std::string>(), mode);
  const json& f = j.at("focus");
  if (f.contains("path")) p.focus.path = f.at("path").get<NodePath>();
  if (f.contains("formula"))
    p.focus.formula = parse_formula(f.at("formula").get<std::string>(), mode);
  if (f.contains("child")) p.focus.child = f.at("child").get<std::size_t>();
  if (f.contains("target")) p.focus.target = f.at("target").get<NodePath>();
  for (const auto& prem : j.at("premises")) p.premises.push_back(proof_from_json_obj(prem, mode));
  return p;
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "\\&"; break;
      case '{': out += "\\{"; break;
      case '}': out += "\\}"; break;
      case '~': out += "\\textasciitilde{}"; break;
      case '<': out += "\\textless{}"; break;
      case '>': out += "\\textgreater{}"; break;
      default: out += c;
    }
  }
  return out;
}

void proof_to_latex_rec(const Proof& p, std::string& out, int depth) {
  std::string pad(2 * depth, ' ');
  if (p.premises.empty()) {
    out += pad + "\\mbox{" + latex_escape(rule_name(p.rule)) + ":\\ " +
           latex_escape(print_ns(p.conclusion)) + "}\n";
    return;
  }
  out += pad + "\\infer[\\mbox{(" + latex_escape(rule_name(p.rule)) + ")}]{\\mbox{" +
         latex_escape(print_ns(p.conclusion)) + "}}{\n";
  for (std::size_t i = 0; i < p.premises.size(); ++i) {
    if (i) out += pad + "  &\n";
    proof_to_latex_rec(p.premises[i], out, depth + 1);
  }
  out += pad + "}\n";
}

}  // namespace

std::string proof_to_json(const Proof& p) { return proof_to_json_obj(p).dump(2); }

Proof proof_from_json(const std::string& text, Logic mode) {
  return proof_from_json_obj(json::parse(text), mode);
}

std::string proof_to_latex(const Proof& p) {
  std::string out = "$$\n";
  proof_to_latex_rec(p, out, 0);
  out += "$$\n";
  return out;
}

}  // namespace nsmb
