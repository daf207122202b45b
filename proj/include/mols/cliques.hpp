#pragma once

#include <cstddef>
#include <vector>

#include "mols/parallel.hpp"
#include "mols/point_set.hpp"
#include "mols/scheme.hpp"
#include "mols/transversal.hpp"

namespace mols {

namespace detail {

// Extends `chosen` by members of `cand` (all larger than the last pick) until it has k points.
template <typename Emit>
void grow_cliques(const AssociationScheme& x, int k, PointSet& chosen, PointSet cand, Emit& emit) {
  const int need = k - chosen.size();
  if (need == 0) {
    emit(chosen);
    return;
  }
  while (cand.size() >= need) {
    const int p = cand.first();
    cand.erase(p);
    chosen.insert(p);
    grow_cliques(x, k, chosen, cand & x.first_associates(p), emit);
    chosen.erase(p);
  }
}

}  // namespace detail

// Every clique of exactly k points in the first-associate graph, sorted lexicographically.
inline std::vector<Block> cliques_of_size(const AssociationScheme& x, int k, unsigned threads = 1) {
  const auto v = static_cast<std::size_t>(x.v());
  std::vector<std::vector<Block>> parts(v);
  parallel_for(v, threads, [&](std::size_t root) {
    const int r = static_cast<int>(root);
    PointSet chosen;
    chosen.insert(r);
    auto later = x.first_associates(r) - PointSet::first_n(r + 1);
    auto emit = [&](const PointSet& c) { parts[root].push_back(c); };
    detail::grow_cliques(x, k, chosen, later, emit);
  });
  std::vector<Block> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

// Members of a clique list containing every point of `through`.
inline std::vector<Block> cliques_containing(const std::vector<Block>& cliques, const PointSet& through) {
  std::vector<Block> out;
  for (const auto& c : cliques) {
    if (through.is_subset_of(c)) out.push_back(c);
  }
  return out;
}

}  // namespace mols
