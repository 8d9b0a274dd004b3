#ifndef NSMB_PRINT_HPP
#define NSMB_PRINT_HPP

#include <string>

#include "nsmb/nested_sequent.hpp"

namespace nsmb {

// Canonical text. Reconstructs the Or / Imp / Diamond abbreviations where
// the AST matches their expansion, so output stays readable; parsing the
// result yields the identical AST.
std::string print_formula(const FormulaPtr& f);

std::string print_ns(const NestedSequent& ns);

}  // namespace nsmb

#endif
