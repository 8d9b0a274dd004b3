#ifndef NSMB_FORMULA_HPP
#define NSMB_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "nsmb/rat.hpp"

namespace nsmb {

// The two logic modes. MB uses threshold modalities c/o; MB+ replaces the
// c family (except the universal c0) with exact-value modalities.
enum class Logic { MB, MBPlus };

enum class Dkind { C, O, Eq };

std::string dkind_str(Dkind d);

struct ModalIdx {
  Dkind kind = Dkind::C;
  Rat value;

  friend bool operator==(const ModalIdx&, const ModalIdx&) = default;
};

int cmp(const ModalIdx& a, const ModalIdx& b);  // arbitrary total order for containers
std::string idx_str(const ModalIdx& idx);       // "c,1/2"

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class FKind { Atom, Top, Bot, Neg, And, Box };

// Immutable formula AST. Or / Imp / Diamond are abbreviations and are
// expanded at construction; only the six primitive forms exist here.
struct Formula {
  FKind kind;
  std::string name;   // Atom
  ModalIdx idx;       // Box
  FormulaPtr lhs;     // Neg, And, Box
  FormulaPtr rhs;     // And
};

FormulaPtr mk_atom(std::string name);
FormulaPtr mk_top();
FormulaPtr mk_bot();
FormulaPtr mk_neg(FormulaPtr f);
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_box(ModalIdx idx, FormulaPtr f);

// Abbreviations: A | B = ~(~A & ~B), A -> B = ~A | B, <d,a>A = ~[d,a]~A.
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_imp(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_diamond(ModalIdx idx, FormulaPtr f);

int cmp(const FormulaPtr& a, const FormulaPtr& b);  // structural total order

struct FormulaLess {
  bool operator()(const FormulaPtr& a, const FormulaPtr& b) const { return cmp(a, b) < 0; }
};

using FormulaSet = std::set<FormulaPtr, FormulaLess>;

bool equal(const FormulaPtr& a, const FormulaPtr& b);

// All subformulas of f, including f itself.
void collect_subformulas(const FormulaPtr& f, FormulaSet& out);

int modal_depth(const FormulaPtr& f);

// Index values appearing in modal operators of f.
void collect_index_values(const FormulaPtr& f, std::set<Rat>& out);

// True if every Box index in f is admissible for the mode
// (MB: kinds c/o; MB+: kinds =/o plus the single pair (c,0)).
bool well_formed_for(const FormulaPtr& f, Logic mode);

}  // namespace nsmb

#endif
