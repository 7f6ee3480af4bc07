// report.hpp -- witnesses and per-law verdict reports.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latkit/errors.hpp"

namespace latkit {

/// Counterexample to a named identity: the elements it was evaluated at plus
/// the two unequal sides. Re-evaluating the identity at `elements` must
/// reproduce lhs != rhs.
struct Witness {
  std::vector<std::string> elements;  // 1..3 labels
  std::string identity;
  std::string lhs;
  std::string rhs;
};

struct PropertyVerdict {
  std::string property;
  bool holds = false;
  std::optional<Witness> witness;
};

class PropertyReport {
public:
  void add(PropertyVerdict v) { verdicts_.push_back(std::move(v)); }
  const std::vector<PropertyVerdict>& verdicts() const { return verdicts_; }

  const PropertyVerdict& at(const std::string& property) const {
    for (const auto& v : verdicts_)
      if (v.property == property) return v;
    throw UnknownName("no verdict for property: " + property);
  }
  bool holds(const std::string& property) const { return at(property).holds; }
  bool has(const std::string& property) const {
    for (const auto& v : verdicts_)
      if (v.property == property) return true;
    return false;
  }

private:
  std::vector<PropertyVerdict> verdicts_;
};

}  // namespace latkit
