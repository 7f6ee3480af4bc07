// negation.hpp -- negation maps, the negation/law reports, and classification
// into the hierarchy of logics.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latkit/lattice.hpp"
#include "latkit/report.hpp"

namespace latkit {

/// Total unary map on a lattice carrier, table[i] = i'. No axiom is assumed;
/// the reports below check them.
struct NegationMap {
  std::vector<int> table;
  int of(int i) const { return table[i]; }
  int size() const { return (int)table.size(); }
};

/// A lattice together with a candidate negation; the object being classified.
struct LogicStructure {
  FiniteLattice lattice;
  NegationMap neg;

  LogicStructure() = default;
  LogicStructure(FiniteLattice l, NegationMap n);

  int size() const { return lattice.size(); }
  const std::string& name(int i) const { return lattice.name(i); }
};

/// Weak double negation x <= x'', antitony (x <= y implies y' <= x'), and the
/// Boolean boundary condition 0' = 1, 1' = 0. The structure is a fuzzy logic
/// iff all three hold.
PropertyReport negation_axiom_report(const LogicStructure& s);

/// Verdicts for: non-contradiction, tertium non datur, involutivity,
/// disjunctive / conjunctive De Morgan laws, the conjunctive De Morgan
/// inequality, paraconsistency, the orthomodular identity, complementedness.
PropertyReport law_report(const LogicStructure& s);

struct LogicFlags {
  bool fuzzy_negation = false;
  bool non_contradictory = false;
  bool paraconsistent = false;
  bool orthomodular = false;
  bool distributive = false;
  bool involutive = false;
  bool tertium = false;
  bool conj_de_morgan = false;
  bool complemented = false;
  bool boolean = false;
  bool intuitionistic = false;
};

struct LogicClass {
  LogicFlags flags;
  std::string label;
};

/// Computes the flag set and the most specific hierarchy label, ordered
/// Boolean > intuitionistic > distributive logic > quantum >
/// paraconsistent (non-contradictory) > logic > paraconsistent > fuzzy.
LogicClass classify(const LogicStructure& s);

}  // namespace latkit
