#include "latkit/poset.hpp"

#include <set>

namespace latkit {

FinitePoset::FinitePoset(std::vector<std::string> names, std::vector<uint8_t> leq)
    : names_(std::move(names)), leq_(std::move(leq)) {
  std::size_t n = names_.size();
  if (leq_.size() != n * n) throw OutOfRange("relation matrix has wrong shape");
  {
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != n) throw DuplicateLabel("duplicate element label");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!leq_[i * n + i]) throw OutOfRange("relation is not reflexive");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq_[i * n + j] && leq_[j * n + i])
        throw CycleDetected("antisymmetry violated at " + names_[i] + ", " + names_[j]);
      if (!leq_[i * n + j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (leq_[j * n + k] && !leq_[i * n + k])
          throw OutOfRange("relation is not transitive");
    }
}

int FinitePoset::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == label) return (int)i;
  return -1;
}

std::vector<std::pair<int, int>> FinitePoset::covers() const {
  std::vector<std::pair<int, int>> out;
  int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool direct = true;
      for (int k = 0; k < n && direct; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) direct = false;
      if (direct) out.emplace_back(i, j);
    }
  return out;
}

FinitePoset poset_from_covers(const std::vector<std::string>& names,
                              const std::vector<std::pair<std::string, std::string>>& covers) {
  std::size_t n = names.size();
  {
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != n) throw DuplicateLabel("duplicate element label");
  }
  auto index = [&](const std::string& label) {
    for (std::size_t i = 0; i < n; ++i)
      if (names[i] == label) return (int)i;
    throw UnknownLabel("unknown element label: " + label);
  };

  std::vector<uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (const auto& [lo, hi] : covers) leq[(std::size_t)index(lo) * n + index(hi)] = 1;

  // Warshall closure, then an antisymmetry pass to reject cycles.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (leq[k * n + j]) leq[i * n + j] = 1;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i * n + j] && leq[j * n + i])
        throw CycleDetected("cover cycle through " + names[i] + " and " + names[j]);

  return FinitePoset(std::vector<std::string>(names), std::move(leq));
}

}  // namespace latkit
