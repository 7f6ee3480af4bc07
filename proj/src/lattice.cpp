#include "latkit/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace latkit {

namespace {

// Least element of a nonempty bound set, or -1 when none is below all others.
int least_of(const FinitePoset& p, const std::vector<int>& xs) {
  for (int cand : xs) {
    bool ok = true;
    for (int other : xs)
      if (!p.leq(cand, other)) {
        ok = false;
        break;
      }
    if (ok) return cand;  // unique by antisymmetry
  }
  return -1;
}

int greatest_of(const FinitePoset& p, const std::vector<int>& xs) {
  for (int cand : xs) {
    bool ok = true;
    for (int other : xs)
      if (!p.leq(other, cand)) {
        ok = false;
        break;
      }
    if (ok) return cand;
  }
  return -1;
}

}  // namespace

FiniteLattice lattice_from_poset(const FinitePoset& p) {
  int n = p.size();
  if (n == 0) throw NotALattice("empty carrier");
  std::vector<int> meet((std::size_t)n * n, -1), join((std::size_t)n * n, -1);
  std::vector<int> ub, lb;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      ub.clear();
      lb.clear();
      for (int k = 0; k < n; ++k) {
        if (p.leq(i, k) && p.leq(j, k)) ub.push_back(k);
        if (p.leq(k, i) && p.leq(k, j)) lb.push_back(k);
      }
      int sup = ub.empty() ? -1 : least_of(p, ub);
      int inf = lb.empty() ? -1 : greatest_of(p, lb);
      if (sup < 0 || inf < 0)
        throw NotALattice("pair (" + p.name(i) + ", " + p.name(j) + ") has no unique " +
                          (sup < 0 ? "supremum" : "infimum"));
      meet[(std::size_t)i * n + j] = meet[(std::size_t)j * n + i] = inf;
      join[(std::size_t)i * n + j] = join[(std::size_t)j * n + i] = sup;
    }

  int bottom = 0, top = 0;
  for (int i = 1; i < n; ++i) {
    bottom = meet[(std::size_t)bottom * n + i];
    top = join[(std::size_t)top * n + i];
  }
  // A finite lattice always has universal bounds; anything else is a bug above.
  for (int i = 0; i < n; ++i) assert(p.leq(bottom, i) && p.leq(i, top));

  return FiniteLattice(p, std::move(meet), std::move(join), bottom, top);
}

FiniteLattice dual(const FiniteLattice& l) {
  int n = l.size();
  std::vector<uint8_t> leq((std::size_t)n * n, 0);
  std::vector<int> meet((std::size_t)n * n), join((std::size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      leq[(std::size_t)i * n + j] = l.leq(j, i) ? 1 : 0;
      meet[(std::size_t)i * n + j] = l.join(i, j);
      join[(std::size_t)i * n + j] = l.meet(i, j);
    }
  FinitePoset p(l.poset().names(), std::move(leq));
  return FiniteLattice(std::move(p), std::move(meet), std::move(join), l.top(), l.bottom());
}

FiniteLattice direct_product(const FiniteLattice& a, const FiniteLattice& b) {
  int na = a.size(), nb = b.size(), n = na * nb;
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
  auto id = [nb](int i, int j) { return i * nb + j; };
  std::vector<uint8_t> leq((std::size_t)n * n, 0);
  std::vector<int> meet((std::size_t)n * n), join((std::size_t)n * n);
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < nb; ++j1)
      for (int i2 = 0; i2 < na; ++i2)
        for (int j2 = 0; j2 < nb; ++j2) {
          int x = id(i1, j1), y = id(i2, j2);
          leq[(std::size_t)x * n + y] = a.leq(i1, i2) && b.leq(j1, j2) ? 1 : 0;
          meet[(std::size_t)x * n + y] = id(a.meet(i1, i2), b.meet(j1, j2));
          join[(std::size_t)x * n + y] = id(a.join(i1, i2), b.join(j1, j2));
        }
  FinitePoset p(std::move(names), std::move(leq));
  return FiniteLattice(std::move(p), std::move(meet), std::move(join),
                       id(a.bottom(), b.bottom()), id(a.top(), b.top()));
}

FiniteLattice horizontal_sum(const std::vector<FiniteLattice>& blocks) {
  if (blocks.empty()) throw EmptyBlockList("horizontal_sum of no blocks");
  std::vector<std::string> names{"0"};
  std::vector<std::pair<std::string, std::string>> covers;
  std::set<std::string> seen{"0", "1"};
  for (const auto& b : blocks) {
    if (b.bottom() == b.top()) throw BadParams("block without distinct bounds");
    auto rename = [&](int i) {
      if (i == b.bottom()) return std::string("0");
      if (i == b.top()) return std::string("1");
      return b.name(i);
    };
    for (int i = 0; i < b.size(); ++i) {
      if (i == b.bottom() || i == b.top()) continue;
      if (!seen.insert(b.name(i)).second)
        throw DuplicateLabel("interior label reused across blocks: " + b.name(i));
      names.push_back(b.name(i));
    }
    for (auto [lo, hi] : b.poset().covers()) covers.emplace_back(rename(lo), rename(hi));
  }
  names.push_back("1");
  return lattice_from_poset(poset_from_covers(names, covers));
}

std::vector<int> generated_sublattice(const FiniteLattice& l, std::vector<int> xs) {
  if (xs.empty()) throw OutOfRange("generated_sublattice of empty set");
  std::vector<uint8_t> in((std::size_t)l.size(), 0);
  for (int x : xs) in[x] = 1;
  std::vector<int> work;
  for (int i = 0; i < l.size(); ++i)
    if (in[i]) work.push_back(i);
  for (std::size_t a = 0; a < work.size(); ++a)
    for (std::size_t b = 0; b <= a; ++b) {
      for (int v : {l.meet(work[a], work[b]), l.join(work[a], work[b])})
        if (!in[v]) {
          in[v] = 1;
          work.push_back(v);
        }
    }
  std::sort(work.begin(), work.end());
  return work;
}

FiniteLattice chain_lattice(int n, std::vector<std::string> labels) {
  if (n <= 0) throw BadParams("chain needs at least one element");
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  if ((int)labels.size() != n) throw BadParams("label count mismatch");
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(labels[i], labels[i + 1]);
  return lattice_from_poset(poset_from_covers(labels, covers));
}

bool is_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  int n = a.size();
  if (n != b.size()) return false;
  if (n > 8) throw OutOfRange("is_isomorphic is brute force; carrier too large");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (a.leq(i, j) != b.leq(perm[i], perm[j])) ok = false;
    if (ok) return true;  // order isomorphism carries meets/joins along
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace latkit
