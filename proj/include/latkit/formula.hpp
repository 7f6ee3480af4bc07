// formula.hpp -- propositional formula AST, text parser, evaluation over a
// LogicStructure, identity checking, and distributive normal forms.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "latkit/negation.hpp"
#include "latkit/report.hpp"
#include "latkit/residuation.hpp"

namespace latkit {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class Connective { Var, Bottom, Top, Not, And, Or, Imp, Iff };

struct Formula {
  Connective kind;
  std::string var;   // Var only
  FormulaPtr lhs;    // unary/binary
  FormulaPtr rhs;    // binary only

  static FormulaPtr variable(std::string name);
  static FormulaPtr constant(bool top);
  static FormulaPtr make(Connective kind, FormulaPtr a, FormulaPtr b = nullptr);

  std::set<std::string> variables() const;
};

/// Grammar: precedence ~ > & > | > -> > <->, -> right-associative,
/// parentheses, identifiers [a-zA-Z_][a-zA-Z0-9_]*, constants 0 and 1.
/// Throws SyntaxError with a character position.
FormulaPtr parse(const std::string& text);

/// Canonical printer with minimal parentheses; parse round-trips through it.
std::string print(const FormulaPtr& f);

/// How to read x -> y on a structure.
struct ImplicationSemantics {
  enum Kind { OrthoArrow, ResiduatedArrow, TableArrow } kind = OrthoArrow;
  std::optional<ResiduumTable> table;  // ResiduatedArrow / TableArrow

  static ImplicationSemantics ortho() { return {OrthoArrow, std::nullopt}; }
  static ImplicationSemantics residuated(ResiduumTable t) {
    return {ResiduatedArrow, std::move(t)};
  }
  static ImplicationSemantics from_table(ResiduumTable t) {
    return {TableArrow, std::move(t)};
  }
};

/// ResiduatedArrow when the lattice is implicative, else OrthoArrow.
ImplicationSemantics default_semantics(const LogicStructure& s);

/// Bottom-up evaluation; <-> is (x->y)&(y->x). Throws UnboundVariable and
/// SemanticsUnavailable.
int eval(const FormulaPtr& f, const LogicStructure& s, const ImplicationSemantics& sem,
         const std::map<std::string, int>& env);

struct IdentityResult {
  bool holds = true;
  std::optional<Witness> witness;  // first counterexample in mixed-radix order
};

/// lhs == rhs under every assignment of carrier elements to the shared
/// variable set; assignments are enumerated in mixed-radix order over the
/// variables sorted by name, so the reported witness is deterministic.
IdentityResult holds_identity(const LogicStructure& s, const ImplicationSemantics& sem,
                              const FormulaPtr& lhs, const FormulaPtr& rhs);

/// Classical two-valued tautology check over all 0-1 assignments.
bool boolean_tautology(const FormulaPtr& f);

enum class NormalFormMode { JoinOfMeets, MeetOfJoins };

/// For a formula built from variables, & and | only: the antichain of
/// variable sets S with f equivalent to join over S of meets (or dually) in
/// every distributive lattice. Throws UnsupportedConnective otherwise.
std::vector<std::set<std::string>> normal_form(const FormulaPtr& f, NormalFormMode mode);

}  // namespace latkit
