// fuzzy_logic.hpp -- closure-generated logics of piecewise-linear membership
// functions under pointwise min, max and the Lukasiewicz negation.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latkit/negation.hpp"
#include "latkit/pwl.hpp"

namespace latkit {

/// A finite set of membership functions closed under min, max and 1-f,
/// containing the constants 0 and 1, together with the LogicStructure of the
/// pointwise order. Element labels are the generating expressions ("a&~a").
struct FunctionLogic {
  std::vector<PiecewiseLinear> elements;
  std::vector<std::string> labels;
  LogicStructure structure;

  int index_of(const PiecewiseLinear& f) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == f) return (int)i;
    return -1;
  }
};

/// Least set containing the generators and the constants 0, 1 that is closed
/// under min, max and Lukasiewicz negation. The worklist runs breadth-first
/// with deterministic element numbering by insertion, so labels are
/// reproducible. Throws ClosureBudgetExceeded past `budget` elements.
FunctionLogic closure_lattice(const std::vector<PiecewiseLinear>& generators,
                              const std::vector<std::string>& generator_names = {},
                              std::size_t budget = 4096);

/// The three membership functions of the temperature example: a "cold",
/// b "warm", c "hot" with breakpoints at 5, 15, 25, 35 degrees.
struct TemperatureGenerators {
  PiecewiseLinear a;
  PiecewiseLinear b;
  PiecewiseLinear c;
};
TemperatureGenerators temperature_generators();

}  // namespace latkit
