// catalog.hpp -- constructors for the named finite structures, each with its
// standard negation (and fusion/implication tables) where one exists.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latkit/negation.hpp"
#include "latkit/residuation.hpp"

namespace latkit {

struct CatalogEntry {
  std::string name;  // canonical, e.g. "MO(3)"
  FiniteLattice lattice;
  std::optional<NegationMap> negation;

  // Extra operation tables (BN4, LUK, GOEDEL, RM); fusion is not a lattice
  // operation, so it rides on the entry rather than on LogicStructure.
  std::optional<ResiduumTable> fusion;
  std::optional<ResiduumTable> implication;

  // Flags asserted for this structure. Keys are classify flag
  // names plus "modular"; the selftest checks them all.
  std::map<std::string, bool> expected;
  std::optional<std::string> expected_label;

  LogicStructure structure() const {
    if (!negation) throw SemanticsUnavailable(name + " carries no negation");
    return LogicStructure(lattice, *negation);
  }
};

/// Builds a catalog entry. Names (case-insensitive): M5, N5, O6, L7, F2,
/// CUBE(n), MO(n), BN4, MO1, LUK(n), GOEDEL(n), RM(2n+1), G6, G8, G14,
/// LSTAR_GRID(n), REGISTER2. Throws UnknownName / BadParams.
CatalogEntry build(const std::string& name, const std::vector<int>& params = {});

/// Parses "NAME" or "NAME(k)" and builds it.
CatalogEntry build_by_name(const std::string& text);

/// The canonical entry list exercised by the selftest and the CLI.
std::vector<std::string> default_catalog_names();

struct SelftestResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> diagnostics;
};

/// Rebuilds every default entry and checks its classification against the
/// expected flags, plus the frozen fusion/implication tables of L3, G3, RM3
/// and BN4 and the per-entry identities.
std::vector<SelftestResult> catalog_selftest();

}  // namespace latkit
