// residuation.hpp -- relative pseudocomplements, implicative (Heyting)
// structure, the Boolean-equivalence theorem, Curry fixed points, and exact
// t-norm calculus.
#pragma once

#include <optional>
#include <vector>

#include "latkit/negation.hpp"
#include "latkit/rational.hpp"
#include "latkit/report.hpp"

namespace latkit {

/// Residuum table of an implicative lattice: arrow[a][b] is the greatest x
/// with a & x <= b.
struct ResiduumTable {
  int n = 0;
  std::vector<int> arrow;  // n*n
  int of(int a, int b) const { return arrow[(std::size_t)a * n + b]; }
};

/// Greatest element of {x : a & x <= b} when that set has a maximum.
std::optional<int> relative_pseudocomplement(const FiniteLattice& l, int a, int b);

struct ImplicativeReport {
  PropertyReport report;                  // "implicative" + the residuation laws
  std::optional<ResiduumTable> residuum;  // present iff implicative
  std::vector<int> pseudocomplement;      // a -> 0 column, present iff implicative
};

/// Decides implicativity pair-by-pair; on success fills the arrow table,
/// verifies modus ponens, residuation, the monotonicity laws, the standard
/// residuation identities, contraction, and (a|b)->c = (a->c)&(b->c)
/// exhaustively, and cross-asserts distributivity.
ImplicativeReport implicative_report(const FiniteLattice& l);

/// Four conditions that stand or fall together on an implicative lattice:
/// stability a = ~~a, tertium 1 = a | ~a, Peirce a = (a->b)->a, and
/// 1 = a | (a->b). Throws NotImplicative.
PropertyReport boolean_equivalence_report(const FiniteLattice& l);

/// For every y, the fixed points of x |-> (x -> y). Only y = 1 admits one.
std::vector<std::pair<int, std::vector<int>>> curry_scan(const FiniteLattice& l);

enum class TNormKind { Lukasiewicz, Goedel, Product };

/// Exact t-norm value; operands must lie in [0,1].
Rational tnorm_eval(TNormKind kind, const Rational& x, const Rational& y);

/// Closed-form residuum sup{z : x * z <= y}.
Rational tnorm_residuum(TNormKind kind, const Rational& x, const Rational& y);

/// Finite under-approximation of the residuum: sup over the grid with
/// denominator lcm(den x, den y, grid_den). Independent oracle for the closed
/// forms; it never exceeds them and agrees whenever the closed form lies on
/// the grid.
Rational tnorm_residuum_grid_sup(TNormKind kind, const Rational& x, const Rational& y,
                                 std::int64_t grid_den = 48);

struct TNormLogic {
  std::vector<Rational> carrier;  // 0, 1/n, ..., 1
  LogicStructure logic;           // min/max chain with the derived negation
  std::vector<int> fusion;        // (n+1)^2 tables into carrier indices
  ResiduumTable implication;
};

/// Finite Lukasiewicz or Goedel logic on {0, 1/n, ..., 1}. The carrier is
/// verified closed under fusion and implication. The product t-norm is not
/// closed on such grids and throws ProductNotClosed.
TNormLogic build_tnorm_logic(TNormKind kind, int n);

}  // namespace latkit
