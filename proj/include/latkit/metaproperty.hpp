// metaproperty.hpp -- seeded sweeps over random negation tables, checking the
// implications between negation axioms that hold on every lattice.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latkit/negation.hpp"

namespace latkit {

/// Runs `trials` deterministic pseudo-random negation tables on the lattice
/// (uniform tables, involutions and boundary-fixed maps in rotation) and
/// checks, per table:
///   - given weak double negation: antitony iff disjunctive De Morgan,
///   - fuzzy negation and involutive => conjunctive De Morgan,
///   - fuzzy negation, non-contradictory and involutive => tertium non datur,
///   - fuzzy negation => conjunctive De Morgan inequality.
/// Returns a description per violation; empty means the sweep passed.
std::vector<std::string> metaproperty_sweep(const FiniteLattice& lattice,
                                            const std::string& lattice_name, int trials,
                                            std::uint64_t seed);

}  // namespace latkit
