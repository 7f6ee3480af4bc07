#include "latkit/metaproperty.hpp"

#include <random>

namespace latkit {

namespace {

NegationMap random_table(const FiniteLattice& l, std::mt19937& rng, int variant) {
  int n = l.size();
  NegationMap neg;
  neg.table.resize(n);
  if (variant == 1) {
    // random involution with the Boolean boundary fixed
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
      if (i != l.bottom() && i != l.top()) rest.push_back(i);
    for (std::size_t i = rest.size(); i > 1; --i) std::swap(rest[i - 1], rest[rng() % i]);
    neg.table[l.bottom()] = l.top();
    neg.table[l.top()] = l.bottom();
    std::size_t i = 0;
    for (; i + 1 < rest.size(); i += 2) {
      neg.table[rest[i]] = rest[i + 1];
      neg.table[rest[i + 1]] = rest[i];
    }
    if (i < rest.size()) neg.table[rest[i]] = rest[i];
    return neg;
  }
  for (int i = 0; i < n; ++i) neg.table[i] = (int)(rng() % n);
  if (variant == 2) {
    neg.table[l.bottom()] = l.top();
    neg.table[l.top()] = l.bottom();
  }
  return neg;
}

}  // namespace

std::vector<std::string> metaproperty_sweep(const FiniteLattice& lattice,
                                            const std::string& lattice_name, int trials,
                                            std::uint64_t seed) {
  std::vector<std::string> violations;
  std::mt19937 rng((std::uint32_t)(seed * 0x9e3779b9u + lattice.size()));
  for (int t = 0; t < trials; ++t) {
    LogicStructure s(lattice, random_table(lattice, rng, t % 3));
    PropertyReport axioms = negation_axiom_report(s);
    PropertyReport laws = law_report(s);
    bool fuzzy = axioms.holds("weak-double-negation") && axioms.holds("antitony") &&
                 axioms.holds("boolean-boundary");
    auto report = [&](const std::string& what) {
      violations.push_back(lattice_name + " trial " + std::to_string(t) + ": " + what);
    };

    if (axioms.holds("weak-double-negation") &&
        axioms.holds("antitony") != laws.holds("disjunctive-de-morgan"))
      report("antitony and disjunctive De Morgan disagree under weak double negation");
    if (fuzzy && laws.holds("involutive") && !laws.holds("conjunctive-de-morgan"))
      report("involutive fuzzy negation without the conjunctive De Morgan law");
    if (fuzzy && laws.holds("involutive") && laws.holds("non-contradiction") &&
        !laws.holds("tertium-non-datur"))
      report("non-contradictory involutive fuzzy negation without tertium non datur");
    if (fuzzy && !laws.holds("conjunctive-de-morgan-inequality"))
      report("fuzzy negation violating the conjunctive De Morgan inequality");
  }
  return violations;
}

}  // namespace latkit
