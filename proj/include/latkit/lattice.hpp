// lattice.hpp -- finite lattices with dense meet/join tables, and the basic
// combinators (dual, direct product, horizontal sum, generated sublattice).
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latkit/poset.hpp"

namespace latkit {

/// Finite lattice over a FinitePoset. meet/join are total element tables,
/// bottom/top the universal bounds. Values are immutable after construction;
/// every operation on them is a pure function.
class FiniteLattice {
public:
  FiniteLattice() = default;
  FiniteLattice(FinitePoset poset, std::vector<int> meet, std::vector<int> join,
                int bottom, int top)
      : poset_(std::move(poset)), meet_(std::move(meet)), join_(std::move(join)),
        bottom_(bottom), top_(top) {}

  const FinitePoset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  bool leq(int i, int j) const { return poset_.leq(i, j); }
  int meet(int i, int j) const { return meet_[(std::size_t)i * size() + j]; }
  int join(int i, int j) const { return join_[(std::size_t)i * size() + j]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::string& name(int i) const { return poset_.name(i); }
  int index_of(const std::string& label) const { return poset_.index_of(label); }

private:
  FinitePoset poset_;
  std::vector<int> meet_;
  std::vector<int> join_;
  int bottom_ = -1;
  int top_ = -1;
};

/// Fills meet/join by scanning lower/upper bound sets of every pair. Throws
/// NotALattice naming the lexicographically first pair without a unique
/// infimum or supremum.
FiniteLattice lattice_from_poset(const FinitePoset& p);

/// Order reversed, meet and join swapped, bounds swapped.
FiniteLattice dual(const FiniteLattice& l);

/// Componentwise order on pairs; labels "(a,b)".
FiniteLattice direct_product(const FiniteLattice& a, const FiniteLattice& b);

/// Pastes the blocks along shared universal bounds "0" and "1"; elements of
/// distinct blocks are incomparable. Every block needs distinct bottom/top and
/// the interior labels must not collide across blocks.
FiniteLattice horizontal_sum(const std::vector<FiniteLattice>& blocks);

/// Smallest subset of l containing xs and closed under meet and join.
std::vector<int> generated_sublattice(const FiniteLattice& l, std::vector<int> xs);

/// Chain 0 < 1 < ... < n-1 with the given labels (defaults to "0".."n-1").
FiniteLattice chain_lattice(int n, std::vector<std::string> labels = {});

/// Brute-force lattice isomorphism test; only for small carriers (n <= 8).
bool is_isomorphic(const FiniteLattice& a, const FiniteLattice& b);

}  // namespace latkit
