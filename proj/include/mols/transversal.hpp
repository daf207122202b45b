#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mols/error.hpp"
#include "mols/latin.hpp"
#include "mols/parallel.hpp"
#include "mols/point_set.hpp"

namespace mols {

// A set of s points: a transversal, a clique, or a line of a net.
using Block = PointSet;

// Lexicographic order on ascending point lists.
inline bool lex_less(const PointSet& a, const PointSet& b) {
  const auto va = a.to_vector();
  const auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

inline void sort_lex(std::vector<PointSet>& blocks) {
  std::vector<std::pair<std::vector<int>, PointSet>> keyed;
  keyed.reserve(blocks.size());
  for (const auto& b : blocks) keyed.emplace_back(b.to_vector(), b);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] = keyed[i].second;
}

// Names the relation shared by two distinct points, or returns empty when they
// are compatible within one transversal of `pol`.
inline std::string shared_relation(const PolSet& pol, int p, int q) {
  const auto grid = pol.grid();
  if (grid.row(p) == grid.row(q)) return "same row";
  if (grid.col(p) == grid.col(q)) return "same column";
  for (int k = 0; k < pol.size(); ++k) {
    if (pol[k].at(p) == pol[k].at(q)) return "same symbol in L" + std::to_string(k + 1);
  }
  return {};
}

// Throws invalid_anchor if the points do not form a partial transversal.
inline void require_partial_transversal(const PolSet& pol, std::span<const int> points) {
  const int v = pol.grid().size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] < 0 || points[i] >= v) {
      throw Error(ErrorKind::invalid_anchor,
                  "treatment " + std::to_string(points[i] + 1) + " outside 1.." + std::to_string(v));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i] == points[j]) {
        throw Error(ErrorKind::invalid_anchor,
                    "treatment " + std::to_string(points[i] + 1) + " repeated");
      }
      if (auto rel = shared_relation(pol, points[j], points[i]); !rel.empty()) {
        throw Error(ErrorKind::invalid_anchor, "treatments " + std::to_string(points[j] + 1) +
                                                   " and " + std::to_string(points[i] + 1) +
                                                   ": " + rel);
      }
    }
  }
}

inline bool is_common_transversal(const PolSet& pol, const PointSet& block) {
  if (block.size() != pol.order()) return false;
  const auto pts = block.to_vector();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!shared_relation(pol, pts[j], pts[i]).empty()) return false;
    }
  }
  return true;
}

struct DeletionView {
  std::vector<int> anchors;  // in the order supplied
  PointSet surviving;        // non-anchor points untouched by every deletion
  bool paused = false;       // some anchor-free row or column has no survivor
};

inline DeletionView delete_anchors(const PolSet& pol, std::span<const int> anchors) {
  require_partial_transversal(pol, anchors);
  const auto grid = pol.grid();
  const int s = pol.order();
  DeletionView view;
  view.anchors.assign(anchors.begin(), anchors.end());
  for (int p = 0; p < grid.size(); ++p) {
    bool struck = false;
    for (int a : anchors) {
      if (p == a || !shared_relation(pol, a, p).empty()) {
        struck = true;
        break;
      }
    }
    if (!struck) view.surviving.insert(p);
  }
  if (static_cast<int>(anchors.size()) < s) {
    std::vector<bool> row_anchored(static_cast<std::size_t>(s)), col_anchored(row_anchored);
    for (int a : anchors) {
      row_anchored[static_cast<std::size_t>(grid.row(a))] = true;
      col_anchored[static_cast<std::size_t>(grid.col(a))] = true;
    }
    std::vector<int> row_count(static_cast<std::size_t>(s)), col_count(row_count);
    view.surviving.for_each([&](int p) {
      ++row_count[static_cast<std::size_t>(grid.row(p))];
      ++col_count[static_cast<std::size_t>(grid.col(p))];
    });
    for (std::size_t i = 0; i < static_cast<std::size_t>(s); ++i) {
      if ((!row_anchored[i] && row_count[i] == 0) || (!col_anchored[i] && col_count[i] == 0)) {
        view.paused = true;
      }
    }
  }
  return view;
}

namespace detail {

// Depth-first over rows with one column mask and one symbol mask per square.
class TransversalSearch {
 public:
  TransversalSearch(const PolSet& pol, std::span<const int> through)
      : pol_(pol), s_(pol.order()), w_(pol.size()), fixed_col_(static_cast<std::size_t>(s_), -1),
        sym_masks_(static_cast<std::size_t>(w_), 0) {
    require_partial_transversal(pol, through);
    const auto grid = pol.grid();
    for (int p : through) {
      fixed_col_[static_cast<std::size_t>(grid.row(p))] = grid.col(p);
      col_mask_ |= 1U << grid.col(p);
      for (int k = 0; k < w_; ++k) sym_masks_[static_cast<std::size_t>(k)] |= 1U << pol[k].at(p);
      anchors_.insert(p);
    }
  }

  // Row of the first branching point, or -1 if every row is anchored.
  [[nodiscard]] int first_free_row() const {
    for (int r = 0; r < s_; ++r) {
      if (fixed_col_[static_cast<std::size_t>(r)] < 0) return r;
    }
    return -1;
  }

  // Emits transversals whose first free row uses column `col` (or all of them for col < 0).
  template <typename Emit>
  void run(int col, Emit&& emit) const {
    State st{col_mask_, sym_masks_, anchors_};
    const int r0 = first_free_row();
    if (r0 < 0) {
      emit(st.chosen);
      return;
    }
    if (col < 0) {
      dfs(0, st, emit);
      return;
    }
    if (!place(r0, col, st)) return;
    dfs(r0 + 1, st, emit);
  }

 private:
  struct State {
    std::uint32_t cols;
    std::vector<std::uint32_t> syms;
    PointSet chosen;
  };

  bool place(int r, int c, State& st) const {
    if ((st.cols >> c) & 1U) return false;
    const int p = r * s_ + c;
    for (int k = 0; k < w_; ++k) {
      if ((st.syms[static_cast<std::size_t>(k)] >> pol_[k].at(p)) & 1U) return false;
    }
    st.cols |= 1U << c;
    for (int k = 0; k < w_; ++k) st.syms[static_cast<std::size_t>(k)] |= 1U << pol_[k].at(p);
    st.chosen.insert(p);
    return true;
  }

  void unplace(int r, int c, State& st) const {
    const int p = r * s_ + c;
    st.cols &= ~(1U << c);
    for (int k = 0; k < w_; ++k) st.syms[static_cast<std::size_t>(k)] &= ~(1U << pol_[k].at(p));
    st.chosen.erase(p);
  }

  template <typename Emit>
  void dfs(int r, State& st, Emit& emit) const {
    while (r < s_ && fixed_col_[static_cast<std::size_t>(r)] >= 0) ++r;
    if (r == s_) {
      emit(st.chosen);
      return;
    }
    for (int c = 0; c < s_; ++c) {
      if (!place(r, c, st)) continue;
      dfs(r + 1, st, emit);
      unplace(r, c, st);
    }
  }

  const PolSet& pol_;
  int s_;
  int w_;
  std::vector<int> fixed_col_;
  std::uint32_t col_mask_ = 0;
  std::vector<std::uint32_t> sym_masks_;
  PointSet anchors_;
};

}  // namespace detail

// All common transversals of `pol` through the given points, sorted lexicographically.
inline std::vector<Block> common_transversals(const PolSet& pol, std::span<const int> through = {},
                                              unsigned threads = 1) {
  const detail::TransversalSearch search(pol, through);
  const int s = pol.order();
  std::vector<std::vector<Block>> parts(static_cast<std::size_t>(s));
  if (search.first_free_row() < 0) {
    search.run(-1, [&](const PointSet& t) { parts[0].push_back(t); });
  } else {
    parallel_for(static_cast<std::size_t>(s), threads, [&](std::size_t c) {
      search.run(static_cast<int>(c), [&](const PointSet& t) { parts[c].push_back(t); });
    });
  }
  std::vector<Block> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  sort_lex(out);
  return out;
}

inline std::vector<Block> common_transversals(const PolSet& pol,
                                              std::initializer_list<int> through,
                                              unsigned threads = 1) {
  return common_transversals(pol, std::span<const int>(through.begin(), through.size()), threads);
}

inline std::size_t count_transversals(const PolSet& pol, std::span<const int> through = {},
                                      unsigned threads = 1) {
  const detail::TransversalSearch search(pol, through);
  const int s = pol.order();
  if (search.first_free_row() < 0) return 1;
  std::vector<std::size_t> counts(static_cast<std::size_t>(s), 0);
  parallel_for(static_cast<std::size_t>(s), threads, [&](std::size_t c) {
    search.run(static_cast<int>(c), [&](const PointSet&) { ++counts[c]; });
  });
  std::size_t total = 0;
  for (auto n : counts) total += n;
  return total;
}

inline std::size_t count_all_transversals(const PolSet& pol, unsigned threads = 1) {
  return count_transversals(pol, {}, threads);
}

}  // namespace mols
