#include "latkit/negation.hpp"

#include <cassert>

#include "latkit/scan.hpp"

namespace latkit {

LogicStructure::LogicStructure(FiniteLattice l, NegationMap n)
    : lattice(std::move(l)), neg(std::move(n)) {
  if (neg.size() != lattice.size())
    throw OutOfRange("negation table size does not match carrier");
  for (int v : neg.table)
    if (v < 0 || v >= lattice.size()) throw OutOfRange("negation table out of range");
}

namespace {

Witness witness(const LogicStructure& s, std::vector<int> elems,
                const std::string& identity, int lhs, int rhs) {
  Witness w;
  for (int e : elems) w.elements.push_back(s.name(e));
  w.identity = identity;
  w.lhs = s.name(lhs);
  w.rhs = s.name(rhs);
  return w;
}

}  // namespace

PropertyReport negation_axiom_report(const LogicStructure& s) {
  const FiniteLattice& l = s.lattice;
  int n = l.size();
  PropertyReport report;

  {
    PropertyVerdict v{"weak-double-negation", true, std::nullopt};
    for (int x = 0; x < n && v.holds; ++x) {
      int xpp = s.neg.of(s.neg.of(x));
      if (!l.leq(x, xpp)) {
        v.holds = false;
        v.witness = witness(s, {x}, "x <= x''", x, xpp);
      }
    }
    report.add(std::move(v));
  }

  {
    PropertyVerdict v{"antitony", true, std::nullopt};
    for (int x = 0; x < n && v.holds; ++x)
      for (int y = 0; y < n && v.holds; ++y) {
        if (!l.leq(x, y)) continue;
        if (!l.leq(s.neg.of(y), s.neg.of(x))) {
          v.holds = false;
          v.witness = witness(s, {x, y}, "x <= y => y' <= x'", s.neg.of(y), s.neg.of(x));
        }
      }
    report.add(std::move(v));
  }

  {
    PropertyVerdict v{"boolean-boundary", true, std::nullopt};
    if (s.neg.of(l.bottom()) != l.top()) {
      v.holds = false;
      v.witness = witness(s, {l.bottom()}, "0' = 1", s.neg.of(l.bottom()), l.top());
    } else if (s.neg.of(l.top()) != l.bottom()) {
      v.holds = false;
      v.witness = witness(s, {l.top()}, "1' = 0", s.neg.of(l.top()), l.bottom());
    }
    report.add(std::move(v));
  }

  return report;
}

PropertyReport law_report(const LogicStructure& s) {
  const FiniteLattice& l = s.lattice;
  int n = l.size();
  PropertyReport report;

  auto unary_law = [&](const std::string& prop, const std::string& identity, auto lhs,
                       auto rhs) {
    PropertyVerdict v{prop, true, std::nullopt};
    for (int x = 0; x < n && v.holds; ++x)
      if (lhs(x) != rhs(x)) {
        v.holds = false;
        v.witness = witness(s, {x}, identity, lhs(x), rhs(x));
      }
    report.add(std::move(v));
  };
  auto binary_law = [&](const std::string& prop, const std::string& identity, auto lhs,
                        auto rhs) {
    PropertyVerdict v{prop, true, std::nullopt};
    for (int x = 0; x < n && v.holds; ++x)
      for (int y = 0; y < n && v.holds; ++y)
        if (lhs(x, y) != rhs(x, y)) {
          v.holds = false;
          v.witness = witness(s, {x, y}, identity, lhs(x, y), rhs(x, y));
        }
    report.add(std::move(v));
  };

  auto np = [&](int x) { return s.neg.of(x); };

  unary_law("non-contradiction", "x & x' = 0", [&](int x) { return l.meet(x, np(x)); },
            [&](int) { return l.bottom(); });
  unary_law("tertium-non-datur", "x | x' = 1", [&](int x) { return l.join(x, np(x)); },
            [&](int) { return l.top(); });
  unary_law("involutive", "x'' = x", [&](int x) { return np(np(x)); },
            [&](int x) { return x; });
  binary_law("disjunctive-de-morgan", "(x|y)' = x' & y'",
             [&](int x, int y) { return np(l.join(x, y)); },
             [&](int x, int y) { return l.meet(np(x), np(y)); });
  binary_law("conjunctive-de-morgan", "(x&y)' = x' | y'",
             [&](int x, int y) { return np(l.meet(x, y)); },
             [&](int x, int y) { return l.join(np(x), np(y)); });

  {
    PropertyVerdict v{"conjunctive-de-morgan-inequality", true, std::nullopt};
    for (int x = 0; x < n && v.holds; ++x)
      for (int y = 0; y < n && v.holds; ++y) {
        int lhs = l.join(np(x), np(y)), rhs = np(l.meet(x, y));
        if (!l.leq(lhs, rhs)) {
          v.holds = false;
          v.witness = witness(s, {x, y}, "x' | y' <= (x&y)'", lhs, rhs);
        }
      }
    report.add(std::move(v));
  }

  {
    PropertyVerdict v{"paraconsistency", true, std::nullopt};
    for (int x = 0; x < n && v.holds; ++x)
      for (int y = 0; y < n && v.holds; ++y) {
        if (x == y || !l.leq(x, y)) continue;
        if (l.meet(np(x), y) == l.bottom()) {
          v.holds = false;
          v.witness = witness(s, {x, y}, "x <= y and x' & y = 0 => x = y", x, y);
        }
      }
    report.add(std::move(v));
  }

  {
    PropertyVerdict v{"orthomodular", true, std::nullopt};
    for (int x = 0; x < n && v.holds; ++x)
      for (int y = 0; y < n && v.holds; ++y) {
        if (!l.leq(x, y)) continue;
        int lhs = l.join(x, l.meet(np(x), y));
        if (lhs != y) {
          v.holds = false;
          v.witness = witness(s, {x, y}, "x <= y => x | (x' & y) = y", lhs, y);
        }
      }
    report.add(std::move(v));
  }

  {
    PropertyVerdict v{"complemented", true, std::nullopt};
    for (int x = 0; x < n && v.holds; ++x) {
      if (l.meet(x, np(x)) != l.bottom()) {
        v.holds = false;
        v.witness = witness(s, {x}, "x & x' = 0", l.meet(x, np(x)), l.bottom());
      } else if (l.join(x, np(x)) != l.top()) {
        v.holds = false;
        v.witness = witness(s, {x}, "x | x' = 1", l.join(x, np(x)), l.top());
      }
    }
    report.add(std::move(v));
  }

  return report;
}

LogicClass classify(const LogicStructure& s) {
  PropertyReport axioms = negation_axiom_report(s);
  PropertyReport laws = law_report(s);
  PropertyReport structure = property_scan(s.lattice);

  LogicFlags f;
  f.fuzzy_negation = axioms.holds("weak-double-negation") && axioms.holds("antitony") &&
                     axioms.holds("boolean-boundary");
  f.non_contradictory = laws.holds("non-contradiction");
  f.paraconsistent = laws.holds("paraconsistency");
  f.orthomodular = laws.holds("orthomodular");
  f.distributive = structure.holds("distributive");
  f.involutive = laws.holds("involutive");
  f.tertium = laws.holds("tertium-non-datur");
  f.conj_de_morgan = laws.holds("conjunctive-de-morgan");
  f.complemented = laws.holds("complemented");
  f.boolean = f.fuzzy_negation && f.non_contradictory && f.distributive && f.complemented;

  bool strict_double_negation = false;  // some x < x''
  for (int x = 0; x < s.size() && !strict_double_negation; ++x) {
    int xpp = s.neg.of(s.neg.of(x));
    if (x != xpp && s.lattice.leq(x, xpp)) strict_double_negation = true;
  }
  f.intuitionistic =
      f.fuzzy_negation && f.non_contradictory && f.distributive && strict_double_negation;

  // The orthomodular identity plus non-contradiction forces an involutive
  // negation (the converse direction fails, e.g. on the hexagon O6).
  if (f.fuzzy_negation && f.non_contradictory && f.orthomodular) assert(f.involutive);

  LogicClass out;
  out.flags = f;
  bool fuzzy = f.fuzzy_negation;
  if (f.boolean)
    out.label = "Boolean logic";
  else if (f.intuitionistic)
    out.label = "intuitionistic logic";
  else if (fuzzy && f.non_contradictory && f.distributive)
    out.label = "distributive logic";
  else if (fuzzy && f.non_contradictory && f.orthomodular)
    out.label = "quantum logic";
  else if (fuzzy && f.non_contradictory && f.paraconsistent)
    out.label = "paraconsistent logic (non-contradictory)";
  else if (fuzzy && f.non_contradictory)
    out.label = "logic";
  else if (fuzzy && f.paraconsistent)
    out.label = "paraconsistent logic";
  else if (fuzzy)
    out.label = "fuzzy logic";
  else
    out.label = "not-a-fuzzy-logic";
  return out;
}

}  // namespace latkit
