#ifndef NSMB_PARSE_HPP
#define NSMB_PARSE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "nsmb/nested_sequent.hpp"

namespace nsmb {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// ASCII grammar, precedence unary > & > | > ->, with -> right-associative:
//   F    := ATOM | "T" | "F" | "~" F | F "&" F | F "|" F | F "->" F
//         | "[" KIND "," NUM "]" F | "<" KIND "," NUM ">" F
//   KIND := "c" | "o" | "="
//   NUM  := decimal | INT "/" INT
// Or, Imp and Diamond expand to the primitive connectives on parse;
// decimals are read as exact fractions.
FormulaPtr parse_formula(std::string_view text, Logic mode = Logic::MB);

//   NS := FLIST "=>" FLIST OPTCHILDREN
//   OPTCHILDREN := "" | "{" CH ("," CH)* "}"
//   CH := "[" KIND "," NUM "]" ":" "(" NS ")"
NestedSequent parse_ns(std::string_view text, Logic mode = Logic::MB);

}  // namespace nsmb

#endif
