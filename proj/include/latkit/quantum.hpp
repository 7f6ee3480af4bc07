// quantum.hpp -- compatibility in orthomodular logics, subspace lattices over
// GF(2), the 2x2 effect order, and MacNeille completion.
#pragma once

#include <optional>
#include <vector>

#include "latkit/negation.hpp"
#include "latkit/rational.hpp"

namespace latkit {

/// True iff both decomposition identities x = (x&y)|(x&y') and
/// y = (y&x)|(y&x') hold. Requires a quantum logic (NotOrthomodular).
bool is_compatible(const LogicStructure& s, int x, int y);

struct Decomposition {
  int u;  // x & y'
  int v;  // x & y
  int w;  // x' & y
};

/// The unique compatible decomposition of x and y when they are compatible,
/// with u | v = x, v | w = y and u, v, w pairwise orthogonal; nullopt when
/// incompatible.
std::optional<Decomposition> compatible_decomposition(const LogicStructure& s, int x, int y);

/// All subspaces of GF(2)^n (n <= 4) ordered by inclusion; meet is
/// intersection, join the span of the union, and the negation the orthogonal
/// complement under the standard dot product. For n >= 2 the complement is a
/// degenerate involutive negation: self-orthogonal lines break
/// non-contradiction.
LogicStructure gf2_subspace_lattice(int n);

/// Symmetric 2x2 rational matrix; a valid effect satisfies 0 <= A <= I in the
/// PSD order.
struct Effect2 {
  Rational a11, a12, a22;

  friend bool operator==(const Effect2& a, const Effect2& b) {
    return a.a11 == b.a11 && a.a12 == b.a12 && a.a22 == b.a22;
  }
  bool psd() const;       // trace >= 0 and det >= 0
  bool is_effect() const;  // 0 <= A and A <= I
  std::string str() const;
};

/// A <= B in the effect order iff B - A is positive semidefinite.
bool effect_leq(const Effect2& a, const Effect2& b);

/// I - A.
Effect2 effect_negation(const Effect2& a);

struct EffectFixture {
  std::vector<Effect2> effects;
  std::vector<std::string> names;
  FinitePoset poset;
  std::vector<int> involution;  // index of I - e
};

/// The named fixture "effects-abcd": the four matrices A, B, C, D together
/// with O, I, closed under the involution I - (.). The closure adds B' = I-B,
/// C' = I-C and D' = I-D, so the fixture carries nine effects.
EffectFixture effects_fixture();

/// Poset with an exact involution (x'' = x, antitone).
struct InvolutedPoset {
  FinitePoset poset;
  NegationMap inv;
};

/// Dedekind-MacNeille completion by cuts X = l(u(X)), ordered by inclusion,
/// with meet = intersection, join = l(u(union)) and the negation
/// X' = {a : a <= b' for all b in X}. The result is a bounded lattice whose
/// negation passes the fuzzy-negation axioms. Input capped at 20 elements.
LogicStructure macneille_completion(const InvolutedPoset& p);

}  // namespace latkit
