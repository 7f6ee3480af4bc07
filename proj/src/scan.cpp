#include "latkit/scan.hpp"

namespace latkit {

namespace {

Witness make_witness(const FiniteLattice& l, std::vector<int> elems,
                     const std::string& identity, int lhs, int rhs) {
  Witness w;
  for (int e : elems) w.elements.push_back(l.name(e));
  w.identity = identity;
  w.lhs = l.name(lhs);
  w.rhs = l.name(rhs);
  return w;
}

}  // namespace

PropertyReport property_scan(const FiniteLattice& l) {
  int n = l.size();
  PropertyReport report;

  {
    PropertyVerdict v{"distributive", true, std::nullopt};
    for (int x = 0; x < n && v.holds; ++x)
      for (int y = 0; y < n && v.holds; ++y)
        for (int z = 0; z < n && v.holds; ++z) {
          int lhs = l.meet(x, l.join(y, z));
          int rhs = l.join(l.meet(x, y), l.meet(x, z));
          if (lhs != rhs) {
            v.holds = false;
            v.witness = make_witness(l, {x, y, z}, "x&(y|z) = (x&y)|(x&z)", lhs, rhs);
          }
        }
    report.add(std::move(v));
  }

  {
    PropertyVerdict v{"modular", true, std::nullopt};
    for (int x = 0; x < n && v.holds; ++x)
      for (int y = 0; y < n && v.holds; ++y)
        for (int z = 0; z < n && v.holds; ++z) {
          if (!l.leq(x, z)) continue;
          int lhs = l.join(x, l.meet(y, z));
          int rhs = l.meet(l.join(x, y), z);
          if (lhs != rhs) {
            v.holds = false;
            v.witness = make_witness(l, {x, y, z}, "x<=z => x|(y&z) = (x|y)&z", lhs, rhs);
          }
        }
    report.add(std::move(v));
  }

  {
    PropertyVerdict v{"cancellation", true, std::nullopt};
    for (int a = 0; a < n && v.holds; ++a)
      for (int x = 0; x < n && v.holds; ++x)
        for (int y = 0; y < n && v.holds; ++y) {
          if (x == y) continue;
          if (l.meet(a, x) == l.meet(a, y) && l.join(a, x) == l.join(a, y)) {
            v.holds = false;
            v.witness = make_witness(l, {a, x, y}, "a&x=a&y and a|x=a|y => x=y", x, y);
          }
        }
    report.add(std::move(v));
  }

  // The remaining entries hold in every lattice; a failure would mean the
  // meet/join tables are corrupt.
  {
    PropertyVerdict v{"distributive-inequalities", true, std::nullopt};
    for (int x = 0; x < n && v.holds; ++x)
      for (int y = 0; y < n && v.holds; ++y)
        for (int z = 0; z < n && v.holds; ++z) {
          int m = l.meet(x, l.join(y, z)), mm = l.join(l.meet(x, y), l.meet(x, z));
          int j = l.join(x, l.meet(y, z)), jj = l.meet(l.join(x, y), l.join(x, z));
          if (!l.leq(mm, m)) {
            v.holds = false;
            v.witness = make_witness(l, {x, y, z}, "(x&y)|(x&z) <= x&(y|z)", mm, m);
          } else if (!l.leq(j, jj)) {
            v.holds = false;
            v.witness = make_witness(l, {x, y, z}, "x|(y&z) <= (x|y)&(x|z)", j, jj);
          }
        }
    report.add(std::move(v));
  }

  {
    PropertyVerdict v{"modular-inequality", true, std::nullopt};
    for (int x = 0; x < n && v.holds; ++x)
      for (int y = 0; y < n && v.holds; ++y)
        for (int z = 0; z < n && v.holds; ++z) {
          if (!l.leq(x, z)) continue;
          int lhs = l.join(x, l.meet(y, z));
          int rhs = l.meet(l.join(x, y), z);
          if (!l.leq(lhs, rhs)) {
            v.holds = false;
            v.witness = make_witness(l, {x, y, z}, "x<=z => x|(y&z) <= (x|y)&z", lhs, rhs);
          }
        }
    report.add(std::move(v));
  }

  // Finite carriers make completeness a theorem; no subset enumeration.
  report.add({"complete", true, std::nullopt});
  report.add({"sigma-complete", true, std::nullopt});

  return report;
}

FiniteLattice pattern_lattice(SublatticePattern pattern) {
  switch (pattern) {
    case SublatticePattern::M5:
      return lattice_from_poset(poset_from_covers(
          {"0", "a", "b", "c", "1"},
          {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}));
    case SublatticePattern::N5:
      return lattice_from_poset(poset_from_covers(
          {"0", "x", "y", "z", "1"},
          {{"0", "y"}, {"0", "z"}, {"z", "x"}, {"y", "1"}, {"x", "1"}}));
    case SublatticePattern::O6:
      return lattice_from_poset(poset_from_covers(
          {"0", "x", "y", "y'", "x'", "1"},
          {{"0", "x"}, {"x", "y"}, {"y", "1"}, {"0", "y'"}, {"y'", "x'"}, {"x'", "1"}}));
  }
  throw BadParams("unknown sublattice pattern");
}

namespace {

struct EmbeddingSearch {
  const FiniteLattice& host;
  const FiniteLattice& pat;
  std::vector<int> order;       // pattern elements in assignment order
  std::vector<int> image;       // pattern index -> host index or -1
  std::vector<uint8_t> used;    // host occupancy
  std::uint64_t budget;
  std::uint64_t visited = 0;

  EmbeddingSearch(const FiniteLattice& h, const FiniteLattice& p, std::vector<int> ord,
                  std::uint64_t b)
      : host(h), pat(p), order(std::move(ord)), image(p.size(), -1),
        used(h.size(), 0), budget(b) {}

  bool consistent(int pelem, int helem) const {
    for (int q : order) {
      int hq = image[q];
      if (hq < 0) break;
      int pm = pat.meet(pelem, q), pj = pat.join(pelem, q);
      // Assignment order guarantees pm/pj are assigned or pelem itself.
      int hm = pm == pelem ? helem : image[pm];
      int hj = pj == pelem ? helem : image[pj];
      if (host.meet(helem, hq) != hm || host.join(helem, hq) != hj) return false;
    }
    return true;
  }

  bool extend(std::size_t depth, const std::vector<std::pair<int, int>>& lt_index) {
    if (depth == order.size()) return true;
    int pelem = order[depth];
    for (int h = 0; h < host.size(); ++h) {
      if (used[h]) continue;
      if (++visited > budget)
        throw SearchBudgetExceeded("sublattice search budget exhausted");
      bool sym_ok = true;
      for (auto [a, b] : lt_index)
        if (pelem == b && image[a] >= 0 && image[a] > h) sym_ok = false;
      if (!sym_ok || !consistent(pelem, h)) continue;
      image[pelem] = h;
      used[h] = 1;
      if (extend(depth + 1, lt_index)) return true;
      image[pelem] = -1;
      used[h] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_forbidden_sublattice(const FiniteLattice& l,
                                                          SublatticePattern pattern,
                                                          std::uint64_t budget) {
  FiniteLattice pat = pattern_lattice(pattern);
  // Assignment orders keep every referenced meet/join image already placed.
  std::vector<int> order;
  std::vector<std::pair<int, int>> symmetry;  // image[a] < image[b] tie-breaks
  switch (pattern) {
    case SublatticePattern::M5:
      order = {0, 4, 1, 2, 3};
      symmetry = {{1, 2}, {2, 3}};  // the three atoms are interchangeable
      break;
    case SublatticePattern::N5:
      order = {0, 4, 2, 3, 1};  // 0, 1, y, z, x
      break;
    case SublatticePattern::O6:
      order = {0, 5, 1, 2, 3, 4};  // 0, 1, x, y, y', x'
      symmetry = {{1, 3}};         // chain swap (x,y) <-> (y',x')
      break;
  }
  EmbeddingSearch search(l, pat, order, budget);
  if (!search.extend(0, symmetry)) return std::nullopt;
  return search.image;
}

}  // namespace latkit
