// dot.hpp -- Hasse diagram emission in Graphviz DOT.
#pragma once

#include <string>

#include "latkit/negation.hpp"

namespace latkit {

/// DOT digraph of the cover relation, one node per element, edges drawn
/// upward (rankdir=BT). With a negation, nodes are annotated "x / x'".
std::string render_dot(const FiniteLattice& l, const NegationMap* neg = nullptr);

}  // namespace latkit
