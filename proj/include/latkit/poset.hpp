// poset.hpp -- finite partially ordered sets over a dense boolean relation.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "latkit/errors.hpp"

namespace latkit {

/// Finite poset: element labels plus a reflexive, antisymmetric, transitive
/// relation stored as a dense n*n boolean matrix. Element identity is
/// positional; labels are presentation-only.
class FinitePoset {
public:
  FinitePoset() = default;

  /// Takes a relation that must already satisfy the poset laws; they are
  /// re-checked and violations throw CycleDetected (antisymmetry) or
  /// OutOfRange (malformed matrix / missing reflexivity or transitivity).
  FinitePoset(std::vector<std::string> names, std::vector<uint8_t> leq);

  int size() const { return (int)names_.size(); }
  bool leq(int i, int j) const { return leq_[(std::size_t)i * names_.size() + j] != 0; }
  bool lt(int i, int j) const { return i != j && leq(i, j); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a label, or -1 when absent.
  int index_of(const std::string& label) const;

  /// Cover relation (transitive reduction): pairs (i, j) with i covered by j.
  std::vector<std::pair<int, int>> covers() const;

private:
  std::vector<std::string> names_;
  std::vector<uint8_t> leq_;
};

/// Builds the poset whose order is the reflexive-transitive closure of the
/// given cover pairs (lower, upper). Labels must be distinct and the cover
/// graph acyclic.
FinitePoset poset_from_covers(const std::vector<std::string>& names,
                              const std::vector<std::pair<std::string, std::string>>& covers);

}  // namespace latkit
