// scan.hpp -- structural property scans and forbidden-sublattice search.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latkit/lattice.hpp"
#include "latkit/report.hpp"

namespace latkit {

/// Distributivity, modularity (equality form for x <= z), the cancellation
/// property, and the always-true distributive/modular inequalities as
/// assertion-only entries. Failures carry the lexicographically first
/// violating tuple.
PropertyReport property_scan(const FiniteLattice& l);

enum class SublatticePattern { M5, N5, O6 };

/// Builds the pattern itself as a lattice (M5, N5 or the hexagon O6).
FiniteLattice pattern_lattice(SublatticePattern pattern);

/// Searches for an injective map from the pattern into l that preserves meet
/// and join (the image is then a sublattice of l isomorphic to the pattern).
/// Returns the image indices in pattern element order, or nullopt. The search
/// walks at most `budget` candidate assignments, then throws
/// SearchBudgetExceeded.
std::optional<std::vector<int>> find_forbidden_sublattice(
    const FiniteLattice& l, SublatticePattern pattern, std::uint64_t budget = 50000000);

}  // namespace latkit
