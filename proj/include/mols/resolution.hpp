#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mols/error.hpp"
#include "mols/latin.hpp"
#include "mols/parallel.hpp"
#include "mols/point_set.hpp"
#include "mols/transversal.hpp"

namespace mols {

// d parallel classes of s blocks each over the s*s points.
struct Resolution {
  int order = 0;
  std::vector<std::vector<Block>> classes;

  [[nodiscard]] int degree() const { return static_cast<int>(classes.size()); }
  friend bool operator==(const Resolution&, const Resolution&) = default;
};

// Describes the first broken invariant, or returns empty.
inline std::string resolution_violation(const Resolution& r) {
  const auto all = PointSet::first_n(r.order * r.order);
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    const auto& cls = r.classes[c];
    if (static_cast<int>(cls.size()) != r.order) {
      return "class " + std::to_string(c + 1) + " has " + std::to_string(cls.size()) + " blocks";
    }
    PointSet covered;
    for (const auto& b : cls) {
      if (b.size() != r.order) return "class " + std::to_string(c + 1) + " has a block of wrong size";
      if (covered.intersects(b)) return "class " + std::to_string(c + 1) + " has overlapping blocks";
      covered |= b;
    }
    if (covered != all) return "class " + std::to_string(c + 1) + " does not cover every point";
  }
  for (std::size_t c1 = 0; c1 < r.classes.size(); ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < r.classes.size(); ++c2) {
      for (const auto& x : r.classes[c1]) {
        for (const auto& y : r.classes[c2]) {
          if (x.intersection_size(y) != 1) {
            return "classes " + std::to_string(c1 + 1) + " and " + std::to_string(c2 + 1) +
                   " have blocks meeting in " + std::to_string(x.intersection_size(y)) + " points";
          }
        }
      }
    }
  }
  return {};
}

namespace detail {

// Exact search over a lexicographically sorted pool of s-point blocks. Classes are
// ordered by their block through point 0; inside a class the smallest uncovered
// point is always covered next, so every set-family is produced exactly once.
class ResolutionSearch {
 public:
  ResolutionSearch(std::vector<Block> pool, int s) : pool_(std::move(pool)), s_(s) {
    all_ = PointSet::first_n(s * s);
    const auto n = pool_.size();
    contains_.assign(static_cast<std::size_t>(s * s), BitRow(n));
    disjoint_.assign(n, BitRow(n));
    meets_once_.assign(n, BitRow(n));
    for (std::size_t i = 0; i < n; ++i) {
      pool_[i].for_each([&](int p) { contains_[static_cast<std::size_t>(p)].set(i); });
      for (std::size_t j = 0; j < n; ++j) {
        const int k = pool_[i].intersection_size(pool_[j]);
        if (k == 0) disjoint_[i].set(j);
        if (k == 1) meets_once_[i].set(j);
      }
    }
    everything_ = BitRow(n);
    for (std::size_t i = 0; i < n; ++i) everything_.set(i);
  }

  [[nodiscard]] const std::vector<Block>& pool() const { return pool_; }

  // Pool indices of blocks through point 0: the split points for parallel runs.
  [[nodiscard]] std::vector<std::size_t> roots() const {
    std::vector<std::size_t> out;
    if (pool_.empty()) return out;
    contains_[0].for_each_common(everything_, [&](std::size_t i) { out.push_back(i); });
    return out;
  }

  // Enumerates d-class resolutions whose first class starts with `root`.
  // emit(classes) returns false to stop; cancelled() is polled at each node.
  template <typename Emit, typename Cancelled>
  void run(int d, std::size_t root, Emit&& emit, Cancelled&& cancelled) const {
    Frame f{d, {}, false};
    f.classes.assign(static_cast<std::size_t>(d), {});
    auto mask = everything_ & disjoint_[root];
    f.classes[0].push_back(root);
    auto cross = everything_;
    descend(f, 0, pool_[root], mask, cross, root, emit, cancelled);
  }

  template <typename Emit>
  void run(int d, std::size_t root, Emit&& emit) const {
    run(d, root, emit, [] { return false; });
  }

  [[nodiscard]] Resolution to_resolution(const std::vector<std::vector<std::size_t>>& idx) const {
    Resolution r{s_, {}};
    for (const auto& cls : idx) {
      auto sorted = cls;
      std::sort(sorted.begin(), sorted.end());
      std::vector<Block> blocks;
      for (auto i : sorted) blocks.push_back(pool_[i]);
      r.classes.push_back(std::move(blocks));
    }
    return r;
  }

 private:
  struct Frame {
    int d;
    std::vector<std::vector<std::size_t>> classes;
    bool stop;
  };

  // True if some uncovered point has no candidate left in `mask`.
  [[nodiscard]] bool dead_end(const PointSet& covered, const BitRow& mask) const {
    bool dead = false;
    (all_ - covered).for_each([&](int p) {
      if (!dead && !contains_[static_cast<std::size_t>(p)].any_common(mask)) dead = true;
    });
    return dead;
  }

  template <typename Emit, typename Cancelled>
  void descend(Frame& f, int cls, const PointSet& covered, const BitRow& mask, const BitRow& cross,
               std::size_t class_root, Emit& emit, Cancelled& cancelled) const {
    if (f.stop) return;
    if (cancelled()) {
      f.stop = true;
      return;
    }
    if (covered == all_) {
      if (cls + 1 == f.d) {
        if (!emit(f.classes)) f.stop = true;
        return;
      }
      auto next_cross = cross;
      for (auto i : f.classes[static_cast<std::size_t>(cls)]) next_cross.and_with(meets_once_[i]);
      next_cross.for_each_common(contains_[0], [&](std::size_t i) {
        if (f.stop || i <= class_root) return;
        auto& next = f.classes[static_cast<std::size_t>(cls + 1)];
        next.push_back(i);
        const auto m = next_cross & disjoint_[i];
        if (!dead_end(pool_[i], m)) descend(f, cls + 1, pool_[i], m, next_cross, i, emit, cancelled);
        next.pop_back();
      });
      return;
    }
    if (dead_end(covered, mask)) return;
    const int p = (all_ - covered).first();
    mask.for_each_common(contains_[static_cast<std::size_t>(p)], [&](std::size_t i) {
      if (f.stop) return;
      auto& current = f.classes[static_cast<std::size_t>(cls)];
      current.push_back(i);
      descend(f, cls, covered | pool_[i], mask & disjoint_[i], cross, class_root, emit, cancelled);
      current.pop_back();
    });
  }

  std::vector<Block> pool_;
  int s_;
  PointSet all_;
  BitRow everything_;
  std::vector<BitRow> contains_;
  std::vector<BitRow> disjoint_;
  std::vector<BitRow> meets_once_;
};

inline std::vector<Block> normalized_pool(std::vector<Block> pool, int s) {
  for (const auto& b : pool) {
    if (b.size() != s) {
      throw Error(ErrorKind::domain, "block of size " + std::to_string(b.size()) +
                                         " in a pool for order " + std::to_string(s));
    }
  }
  sort_lex(pool);
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

}  // namespace detail

// All families of s pairwise disjoint blocks covering the s*s points, in canonical order.
inline std::vector<std::vector<Block>> find_parallel_classes(const std::vector<Block>& pool, int s,
                                                             unsigned threads = 1) {
  const detail::ResolutionSearch search(detail::normalized_pool(pool, s), s);
  const auto roots = search.roots();
  std::vector<std::vector<std::vector<Block>>> parts(roots.size());
  parallel_for(roots.size(), threads, [&](std::size_t t) {
    search.run(1, roots[t], [&](const std::vector<std::vector<std::size_t>>& idx) {
      parts[t].push_back(search.to_resolution(idx).classes.front());
      return true;
    });
  });
  std::vector<std::vector<Block>> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

// Up to `limit` distinct d-class resolutions in canonical order.
inline std::vector<Resolution> enumerate_resolutions(const std::vector<Block>& pool, int s, int d,
                                                     std::size_t limit, unsigned threads = 1) {
  if (d < 0) throw Error(ErrorKind::domain, "negative degree");
  if (limit == 0) return {};
  if (d == 0) return {Resolution{s, {}}};
  const detail::ResolutionSearch search(detail::normalized_pool(pool, s), s);
  const auto roots = search.roots();
  std::vector<std::vector<Resolution>> parts(roots.size());
  // Once `limit` results exist in lower-indexed roots, later roots can stop.
  std::atomic<std::size_t> satisfied_at{std::numeric_limits<std::size_t>::max()};
  std::vector<std::atomic<std::size_t>> found(roots.size());
  parallel_for(roots.size(), threads, [&](std::size_t t) {
    auto cancelled = [&] { return satisfied_at.load(std::memory_order_relaxed) < t; };
    search.run(
        d, roots[t],
        [&](const std::vector<std::vector<std::size_t>>& idx) {
          parts[t].push_back(search.to_resolution(idx));
          found[t].store(parts[t].size());
          return parts[t].size() < limit;
        },
        cancelled);
    found[t].store(parts[t].size());
    // Roots finish out of order; recheck the prefix total conservatively.
    std::size_t total = 0;
    for (std::size_t u = 0; u <= t; ++u) total += found[u].load();
    if (total >= limit) {
      auto cur = satisfied_at.load();
      while (t < cur && !satisfied_at.compare_exchange_weak(cur, t)) {
      }
    }
  });
  std::vector<Resolution> out;
  for (auto& part : parts) {
    for (auto& r : part) {
      if (out.size() == limit) break;
      out.push_back(std::move(r));
    }
  }
  return out;
}

inline std::optional<Resolution> find_resolution(const std::vector<Block>& pool, int s, int d,
                                                 unsigned threads = 1) {
  auto found = enumerate_resolutions(pool, s, d, 1, threads);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

inline std::size_t count_resolutions(const std::vector<Block>& pool, int s, int d,
                                     std::size_t limit = std::numeric_limits<std::size_t>::max(),
                                     unsigned threads = 1) {
  if (d < 0) throw Error(ErrorKind::domain, "negative degree");
  if (limit == 0) return 0;
  if (d == 0) return 1;
  const detail::ResolutionSearch search(detail::normalized_pool(pool, s), s);
  const auto roots = search.roots();
  std::vector<std::size_t> counts(roots.size(), 0);
  parallel_for(roots.size(), threads, [&](std::size_t t) {
    search.run(d, roots[t], [&](const std::vector<std::vector<std::size_t>>&) {
      return ++counts[t] < limit;
    });
  });
  std::size_t total = 0;
  for (auto c : counts) total += c;
  return std::min(total, limit);
}

namespace detail {

inline void require_degree(const PolSet& pol, int d) {
  const int max_d = pol.order() - 1 - pol.size();
  if (d < 0 || d > max_d) {
    throw Error(ErrorKind::precondition, "degree " + std::to_string(d) + " outside 0.." +
                                             std::to_string(max_d) + " for POL(" +
                                             std::to_string(pol.order()) + "," +
                                             std::to_string(pol.size()) + ")");
  }
}

}  // namespace detail

inline std::optional<Resolution> find_resolution(const PolSet& pol, int d, unsigned threads = 1) {
  detail::require_degree(pol, d);
  return find_resolution(common_transversals(pol, {}, threads), pol.order(), d, threads);
}

inline std::size_t count_resolutions(const PolSet& pol, int d,
                                     std::size_t limit = std::numeric_limits<std::size_t>::max(),
                                     unsigned threads = 1) {
  detail::require_degree(pol, d);
  return count_resolutions(common_transversals(pol, {}, threads), pol.order(), d, limit, threads);
}

inline std::vector<Resolution> enumerate_resolutions(const PolSet& pol, int d, std::size_t limit,
                                                     unsigned threads = 1) {
  detail::require_degree(pol, d);
  return enumerate_resolutions(common_transversals(pol, {}, threads), pol.order(), d, limit, threads);
}

}  // namespace mols
