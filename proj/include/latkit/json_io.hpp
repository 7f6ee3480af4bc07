// json_io.hpp -- the lattice JSON interchange format and report serializers.
#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "latkit/negation.hpp"
#include "latkit/pwl.hpp"
#include "latkit/quantum.hpp"
#include "latkit/report.hpp"

namespace latkit {

struct LoadedLattice {
  FiniteLattice lattice;
  std::optional<NegationMap> negation;
};

/// Lattice file format: {"elements": [names...], "covers": [[lo, hi]...],
/// "negation": [names...] (optional, entry i is the negation of element i)}.
/// Unknown names and duplicate covers are rejected.
LoadedLattice lattice_from_json(const nlohmann::json& j);
LoadedLattice lattice_from_json_text(const std::string& text);
nlohmann::json lattice_to_json(const FiniteLattice& l,
                               const NegationMap* neg = nullptr);

nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const PropertyVerdict& v);
nlohmann::json to_json(const PropertyReport& r);
nlohmann::json to_json(const LogicClass& c);

/// Breakpoint list as an array of ["p/q", "r/s"] pairs.
nlohmann::json to_json(const PiecewiseLinear& f);
PiecewiseLinear pwl_from_json(const nlohmann::json& j);

/// {"a11": "p/q", "a12": "p/q", "a22": "p/q"}.
nlohmann::json to_json(const Effect2& e);
Effect2 effect_from_json(const nlohmann::json& j);

}  // namespace latkit
