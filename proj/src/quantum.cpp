#include "latkit/quantum.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <set>

namespace latkit {

namespace {

void require_quantum(const LogicStructure& s) {
  LogicClass c = classify(s);
  if (!(c.flags.fuzzy_negation && c.flags.non_contradictory && c.flags.orthomodular))
    throw NotOrthomodular("structure is not a quantum logic");
}

bool orthogonal(const LogicStructure& s, int x, int y) {
  const FiniteLattice& l = s.lattice;
  return l.meet(x, y) == l.bottom() && l.leq(x, s.neg.of(y)) && l.leq(y, s.neg.of(x));
}

}  // namespace

bool is_compatible(const LogicStructure& s, int x, int y) {
  require_quantum(s);
  const FiniteLattice& l = s.lattice;
  int xp = s.neg.of(x), yp = s.neg.of(y);
  return l.join(l.meet(x, y), l.meet(x, yp)) == x &&
         l.join(l.meet(y, x), l.meet(y, xp)) == y;
}

std::optional<Decomposition> compatible_decomposition(const LogicStructure& s, int x,
                                                      int y) {
  if (!is_compatible(s, x, y)) return std::nullopt;
  const FiniteLattice& l = s.lattice;
  Decomposition d;
  d.u = l.meet(x, s.neg.of(y));
  d.v = l.meet(x, y);
  d.w = l.meet(s.neg.of(x), y);
  assert(l.join(d.u, d.v) == x && l.join(d.v, d.w) == y);
  assert(orthogonal(s, d.u, d.v) && orthogonal(s, d.v, d.w) && orthogonal(s, d.u, d.w));
  return d;
}

LogicStructure gf2_subspace_lattice(int n) {
  if (n < 1 || n > 4) throw DimensionTooLarge("gf2_subspace_lattice supports n in 1..4");
  int points = 1 << n;

  // A subspace is a point-set mask containing 0 and closed under xor. Spanning
  // every vector subset of size <= n reaches all of them.
  std::set<std::uint32_t> masks;
  std::vector<int> vecs;
  for (int v = 1; v < points; ++v) vecs.push_back(v);
  std::vector<int> stack;
  auto span_mask = [&](const std::vector<int>& basis) {
    std::uint32_t members = 1;  // zero vector
    std::vector<int> elems{0};
    for (int b : basis)
      for (std::size_t i = 0, sz = elems.size(); i < sz; ++i) {
        int w = elems[i] ^ b;
        if (!(members >> w & 1)) {
          members |= 1u << w;
          elems.push_back(w);
        }
      }
    return members;
  };
  std::vector<std::vector<int>> subsets{{}};
  for (int v : vecs) {
    std::size_t sz = subsets.size();
    for (std::size_t i = 0; i < sz; ++i) {
      if ((int)subsets[i].size() >= n) continue;
      std::vector<int> next = subsets[i];
      next.push_back(v);
      subsets.push_back(std::move(next));
    }
  }
  for (const auto& basis : subsets) masks.insert(span_mask(basis));

  std::vector<std::uint32_t> spaces(masks.begin(), masks.end());
  std::sort(spaces.begin(), spaces.end(), [](std::uint32_t a, std::uint32_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });

  auto vec_label = [&](int v) {
    std::string s;
    for (int bit = n - 1; bit >= 0; --bit) s += (v >> bit & 1) ? '1' : '0';
    return s;
  };
  std::vector<std::string> names;
  for (std::uint32_t m : spaces) {
    if (m == 1u) {
      names.push_back("0");
      continue;
    }
    // label by a minimal spanning set in increasing vector order
    std::vector<int> basis;
    std::uint32_t built = 1;
    for (int v = 1; v < points; ++v)
      if ((m >> v & 1) && !(built >> v & 1)) {
        basis.push_back(v);
        built = span_mask(basis);
      }
    std::string label = "<";
    for (std::size_t i = 0; i < basis.size(); ++i)
      label += (i ? "," : "") + vec_label(basis[i]);
    names.push_back(label + ">");
  }

  int count = (int)spaces.size();
  std::vector<uint8_t> leq((std::size_t)count * count, 0);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      leq[(std::size_t)i * count + j] = (spaces[i] & ~spaces[j]) == 0 ? 1 : 0;
  FiniteLattice lattice = lattice_from_poset(FinitePoset(names, std::move(leq)));

  auto dot = [&](int a, int b) { return std::popcount((unsigned)(a & b)) & 1; };
  NegationMap neg;
  for (int i = 0; i < count; ++i) {
    std::uint32_t comp = 0;
    for (int w = 0; w < points; ++w) {
      bool ortho = true;
      for (int v = 0; v < points && ortho; ++v)
        if ((spaces[i] >> v & 1) && dot(v, w)) ortho = false;
      if (ortho) comp |= 1u << w;
    }
    auto it = std::find(spaces.begin(), spaces.end(), comp);
    assert(it != spaces.end());  // orthogonal complements are subspaces
    neg.table.push_back((int)(it - spaces.begin()));
  }
  return LogicStructure(std::move(lattice), std::move(neg));
}

bool Effect2::psd() const {
  Rational trace = a11 + a22;
  Rational det = a11 * a22 - a12 * a12;
  return trace >= Rational(0) && det >= Rational(0);
}

bool Effect2::is_effect() const { return psd() && effect_negation(*this).psd(); }

std::string Effect2::str() const {
  return "[" + a11.str() + ", " + a12.str() + "; " + a12.str() + ", " + a22.str() + "]";
}

bool effect_leq(const Effect2& a, const Effect2& b) {
  Effect2 diff{b.a11 - a.a11, b.a12 - a.a12, b.a22 - a.a22};
  return diff.psd();
}

Effect2 effect_negation(const Effect2& a) {
  return Effect2{Rational(1) - a.a11, -a.a12, Rational(1) - a.a22};
}

EffectFixture effects_fixture() {
  Effect2 O{Rational(0), Rational(0), Rational(0)};
  Effect2 I{Rational(1), Rational(0), Rational(1)};
  Effect2 A{Rational(1, 2), Rational(0), Rational(1, 2)};
  Effect2 B{Rational(3, 4), Rational(0), Rational(1, 4)};
  Effect2 C{Rational(1, 2), Rational(0), Rational(1, 4)};
  Effect2 D{Rational(7, 16), Rational(1, 8), Rational(3, 16)};

  EffectFixture out;
  std::vector<std::pair<std::string, Effect2>> base = {
      {"O", O}, {"A", A}, {"B", B}, {"C", C}, {"D", D}, {"I", I}};
  auto find = [&](const Effect2& e) {
    for (std::size_t i = 0; i < out.effects.size(); ++i)
      if (out.effects[i] == e) return (int)i;
    return -1;
  };
  for (auto& [name, e] : base) {
    assert(e.is_effect());
    out.effects.push_back(e);
    out.names.push_back(name);
  }
  // Close under the involution; A is self-negating, O and I swap.
  for (std::size_t i = 0; i < out.effects.size(); ++i) {
    Effect2 ne = effect_negation(out.effects[i]);
    if (find(ne) < 0) {
      out.effects.push_back(ne);
      out.names.push_back(out.names[i] + "'");
    }
  }
  for (const auto& e : out.effects) out.involution.push_back(find(effect_negation(e)));

  int n = (int)out.effects.size();
  std::vector<uint8_t> leq((std::size_t)n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      leq[(std::size_t)i * n + j] = effect_leq(out.effects[i], out.effects[j]) ? 1 : 0;
  out.poset = FinitePoset(out.names, std::move(leq));
  return out;
}

LogicStructure macneille_completion(const InvolutedPoset& p) {
  const FinitePoset& base = p.poset;
  int n = base.size();
  if (n > 20) throw DimensionTooLarge("MacNeille input capped at 20 elements");
  if ((int)p.inv.table.size() != n)
    throw InvolutionViolated("involution table size mismatch");
  for (int x = 0; x < n; ++x) {
    if (p.inv.of(p.inv.of(x)) != x)
      throw InvolutionViolated("involution is not an involution at " + base.name(x));
    for (int y = 0; y < n; ++y)
      if (base.leq(x, y) && !base.leq(p.inv.of(y), p.inv.of(x)))
        throw InvolutionViolated("involution is not antitone at " + base.name(x) + ", " +
                                 base.name(y));
  }

  using Mask = std::uint32_t;
  auto down = [&](int x) {
    Mask m = 0;
    for (int y = 0; y < n; ++y)
      if (base.leq(y, x)) m |= Mask(1) << y;
    return m;
  };
  auto upper_bounds = [&](Mask m) {
    Mask u = 0;
    for (int d = 0; d < n; ++d) {
      bool all = true;
      for (int y = 0; y < n && all; ++y)
        if ((m >> y & 1) && !base.leq(y, d)) all = false;
      if (all) u |= Mask(1) << d;
    }
    return u;
  };
  auto lower_bounds = [&](Mask m) {
    Mask l = 0;
    for (int d = 0; d < n; ++d) {
      bool all = true;
      for (int y = 0; y < n && all; ++y)
        if ((m >> y & 1) && !base.leq(d, y)) all = false;
      if (all) l |= Mask(1) << d;
    }
    return l;
  };
  auto cut_of = [&](Mask m) { return lower_bounds(upper_bounds(m)); };

  // A cut with a nonempty upper-bound set is the intersection of the
  // principal down-sets of its upper bounds; the only other cut is the full
  // carrier. Closing the principals under intersection therefore enumerates
  // MC(B) without scanning all subsets.
  std::vector<Mask> cuts;
  auto add = [&](Mask m) {
    if (std::find(cuts.begin(), cuts.end(), m) == cuts.end()) cuts.push_back(m);
  };
  for (int x = 0; x < n; ++x) add(down(x));
  add(cut_of(0));                 // bottom cut l(u(empty))
  add((Mask(1) << n) - 1);        // top cut
  for (std::size_t i = 0; i < cuts.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(cuts[i] & cuts[j]);
  for (Mask m : cuts) assert(cut_of(m) == m);
  std::sort(cuts.begin(), cuts.end(), [](Mask a, Mask b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });

  std::vector<std::string> names;
  for (Mask m : cuts) {
    std::string s = "{";
    bool first = true;
    for (int x = 0; x < n; ++x)
      if (m >> x & 1) {
        if (!first) s += ",";
        s += base.name(x);
        first = false;
      }
    names.push_back(s + "}");
  }

  int count = (int)cuts.size();
  std::vector<uint8_t> leq((std::size_t)count * count, 0);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      leq[(std::size_t)i * count + j] = (cuts[i] & ~cuts[j]) == 0 ? 1 : 0;
  FiniteLattice lattice = lattice_from_poset(FinitePoset(names, std::move(leq)));

  NegationMap neg;
  for (Mask m : cuts) {
    // X' = {a : a <= b' for every b in X} = intersection of down(b').
    Mask img = (Mask(1) << n) - 1;
    for (int b = 0; b < n; ++b)
      if (m >> b & 1) img &= down(p.inv.of(b));
    auto it = std::find(cuts.begin(), cuts.end(), img);
    assert(it != cuts.end());  // l(S) is always a cut
    neg.table.push_back((int)(it - cuts.begin()));
  }
  return LogicStructure(std::move(lattice), std::move(neg));
}

}  // namespace latkit
