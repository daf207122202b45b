#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mols/cliques.hpp"
#include "mols/error.hpp"
#include "mols/io.hpp"
#include "mols/latin.hpp"
#include "mols/point_set.hpp"
#include "mols/resolution.hpp"
#include "mols/scheme.hpp"
#include "mols/transversal.hpp"

namespace mols {

enum class Verdict { satisfied, violated, not_applicable };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::satisfied: return "satisfied";
    case Verdict::violated: return "violated";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "unknown";
}

struct Witness {
  std::vector<int> points;  // 0-based
  std::vector<Block> sets;
  std::string detail;
};

struct PropertyResult {
  std::string name;
  Verdict verdict = Verdict::satisfied;
  std::optional<Witness> witness;
  std::string note;
};

struct PropertyReport {
  std::vector<PropertyResult> results;

  [[nodiscard]] const PropertyResult& operator[](std::string_view name) const {
    for (const auto& r : results) {
      if (r.name == name) return r;
    }
    throw Error(ErrorKind::domain, "no property named " + std::string(name));
  }
  [[nodiscard]] bool any_violated() const {
    return std::any_of(results.begin(), results.end(),
                       [](const auto& r) { return r.verdict == Verdict::violated; });
  }
};

// A partition of N(t): g cliques through t whose other points are disjoint and cover N(t).
using NeighborPartition = std::vector<Block>;

namespace detail {

inline int order_of(const AssociationScheme& x) {
  const int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(x.v()))));
  if (s * s != x.v()) {
    throw Error(ErrorKind::dimension, std::to_string(x.v()) + " points is not a square grid");
  }
  return s;
}

inline PropertyResult ok(std::string name, std::string note = {}) {
  return PropertyResult{std::move(name), Verdict::satisfied, std::nullopt, std::move(note)};
}

inline PropertyResult hit(std::string name, Witness w, std::string note = {}) {
  return PropertyResult{std::move(name), Verdict::violated, std::move(w), std::move(note)};
}

inline PropertyResult skipped(std::string name, std::string note) {
  return PropertyResult{std::move(name), Verdict::not_applicable, std::nullopt, std::move(note)};
}

inline std::string block_label(int cls, int idx) {
  return "B^" + std::to_string(cls + 1) + "_" + std::to_string(idx + 1);
}

inline std::vector<Block> through(const std::vector<Block>& cliques, int t) {
  std::vector<Block> out;
  for (const auto& c : cliques) {
    if (c.contains(t)) out.push_back(c);
  }
  return out;
}

inline const Block* block_containing(const std::vector<Block>& blocks, int p) {
  for (const auto& b : blocks) {
    if (b.contains(p)) return &b;
  }
  return nullptr;
}

// Pool cliques that belong to at least one parallel class.
inline std::vector<bool> in_some_class(const std::vector<Block>& index, int s) {
  std::vector<bool> marked(index.size(), false);
  for (const auto& cls : find_parallel_classes(index, s)) {
    for (const auto& b : cls) {
      const auto it = std::lower_bound(index.begin(), index.end(), b, lex_less);
      if (it != index.end() && *it == b) marked[static_cast<std::size_t>(it - index.begin())] = true;
    }
  }
  return marked;
}

}  // namespace detail

// Every way to cover N(t) with g of the given cliques through t, in canonical order.
inline std::vector<NeighborPartition> neighbor_partitions(const AssociationScheme& x, int t, int g,
                                                          std::vector<Block> cliques) {
  for (const auto& c : cliques) {
    if (!c.contains(t)) {
      throw Error(ErrorKind::invalid_clique, "set " + to_dash(c) + " does not contain " + std::to_string(t + 1));
    }
    if (!x.is_clique(c)) {
      throw Error(ErrorKind::invalid_clique, "set " + to_dash(c) + " has a pair of second associates");
    }
  }
  sort_lex(cliques);
  cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
  const auto& nbrs = x.first_associates(t);
  std::vector<NeighborPartition> out;
  NeighborPartition chosen;
  PointSet single;
  single.insert(t);
  auto rec = [&](auto&& self, const PointSet& covered) -> void {
    if (static_cast<int>(chosen.size()) == g) {
      if (covered == nbrs) out.push_back(chosen);
      return;
    }
    const int p = (nbrs - covered).first();
    if (p < 0) return;
    for (const auto& c : cliques) {
      const auto rest = c - single;
      if (!rest.contains(p) || rest.intersects(covered)) continue;
      chosen.push_back(c);
      self(self, covered | rest);
      chosen.pop_back();
    }
  };
  rec(rec, PointSet{});
  return out;
}

// Theorem-3.6-style battery (i)..(vi) for a candidate classification.
inline PropertyReport check_six_properties(const AssociationScheme& x,
                                           const std::vector<std::vector<Block>>& classes, int g,
                                           const std::vector<Block>& clique_index) {
  const int s = detail::order_of(x);
  const int v = x.v();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t m = 0; m < classes[c].size(); ++m) {
      const auto& b = classes[c][m];
      if (b.size() != s || !x.is_clique(b)) {
        throw Error(ErrorKind::structural, detail::block_label(static_cast<int>(c), static_cast<int>(m)) +
                                               " = " + to_dash(b) + " is not a clique of " +
                                               std::to_string(s) + " first associates");
      }
    }
  }
  PropertyReport report;
  const auto all = PointSet::first_n(v);

  // (i)
  {
    std::optional<Witness> bad;
    for (std::size_t c = 0; c < classes.size() && !bad; ++c) {
      PointSet covered;
      bool disjoint = static_cast<int>(classes[c].size()) == s;
      for (const auto& b : classes[c]) {
        disjoint = disjoint && !covered.intersects(b);
        covered |= b;
      }
      if (!disjoint || covered != all) {
        bad = Witness{{}, classes[c], "class " + std::to_string(c + 1) + " does not partition the points"};
      }
    }
    if (!bad && static_cast<int>(classes.size()) != g) {
      bad = Witness{{}, {}, std::to_string(classes.size()) + " classes, expected " + std::to_string(g)};
    }
    report.results.push_back(bad ? detail::hit("i", *bad) : detail::ok("i"));
  }

  // (ii): smallest overlap of two or more points, else the first disjoint pair.
  {
    std::optional<Witness> overlap;
    std::optional<Witness> apart;
    int best = s + 1;
    for (std::size_t a = 0; a < classes.size(); ++a) {
      for (std::size_t b = a + 1; b < classes.size(); ++b) {
        for (std::size_t m = 0; m < classes[a].size(); ++m) {
          for (std::size_t n = 0; n < classes[b].size(); ++n) {
            const auto meet = classes[a][m] & classes[b][n];
            const int k = meet.size();
            if (k == 1 || (k == 0 && apart) || (k > 1 && k >= best)) continue;
            Witness w{meet.to_vector(), {classes[a][m], classes[b][n]},
                      detail::block_label(static_cast<int>(a), static_cast<int>(m)) + " and " +
                          detail::block_label(static_cast<int>(b), static_cast<int>(n)) + " share " +
                          std::to_string(k) + " points"};
            if (k == 0) {
              apart = std::move(w);
            } else {
              best = k;
              overlap = std::move(w);
            }
          }
        }
      }
    }
    if (overlap) report.results.push_back(detail::hit("ii", *overlap));
    else if (apart) report.results.push_back(detail::hit("ii", *apart));
    else report.results.push_back(detail::ok("ii"));
  }

  // (iii)
  {
    std::optional<Witness> bad;
    for (int t = 0; t < v && !bad; ++t) {
      if (neighbor_partitions(x, t, g, detail::through(clique_index, t)).empty()) {
        bad = Witness{{t}, {}, "no partition of the first associates into " + std::to_string(g) + " cliques"};
      }
    }
    report.results.push_back(bad ? detail::hit("iii", *bad) : detail::ok("iii"));
  }

  // (iv): blocks through t, one per class, are exactly {t} u A_k for a partition of N(t).
  std::vector<std::vector<Block>> at(static_cast<std::size_t>(v));
  {
    std::optional<Witness> bad;
    for (int t = 0; t < v; ++t) {
      auto& mine = at[static_cast<std::size_t>(t)];
      for (const auto& cls : classes) {
        for (const auto& b : cls) {
          if (b.contains(t)) mine.push_back(b);
        }
      }
      if (bad) continue;
      PointSet covered;
      bool disjoint = static_cast<int>(mine.size()) == g;
      for (const auto& b : mine) {
        auto rest = b;
        rest.erase(t);
        disjoint = disjoint && !covered.intersects(rest);
        covered |= rest;
      }
      if (!disjoint || covered != x.first_associates(t)) {
        bad = Witness{{t}, mine, "blocks through the point do not partition its first associates"};
      }
    }
    report.results.push_back(bad ? detail::hit("iv", *bad) : detail::ok("iv"));
  }
  const bool partitions_ok = report.results.back().verdict == Verdict::satisfied;

  // (v)
  if (!partitions_ok) {
    report.results.push_back(detail::skipped("v", "needs (iv)"));
  } else {
    std::optional<Witness> bad;
    auto one_side = [&](int t1, int t2, const Block& shared1, const std::vector<Block>& a1,
                        const Block& shared2, const std::vector<Block>& a2) -> std::optional<Witness> {
      const auto common = x.first_associates(t1) & x.first_associates(t2);
      for (const auto& xb : a1) {
        if (xb == shared1) continue;
        int empty = 0;
        for (const auto& yb : a2) {
          if (yb == shared2) continue;
          const auto meet = xb & yb;
          if (meet.empty()) {
            ++empty;
          } else if (meet.size() != 1 || !meet.is_subset_of(common)) {
            return Witness{{t1, t2}, {xb, yb}, "sets meet in " + to_dash(meet)};
          }
        }
        if (empty != 1) {
          return Witness{{t1, t2}, {xb}, "set is disjoint from " + std::to_string(empty) + " sets through the partner"};
        }
      }
      return std::nullopt;
    };
    for (int t1 = 0; t1 < v && !bad; ++t1) {
      x.first_associates(t1).for_each([&](int t2) {
        if (bad || t2 < t1) return;
        const auto& a1 = at[static_cast<std::size_t>(t1)];
        const auto& a2 = at[static_cast<std::size_t>(t2)];
        const Block* x1 = detail::block_containing(a1, t2);
        const Block* y1 = detail::block_containing(a2, t1);
        if (!x1 || !y1 || *x1 != *y1) {
          std::vector<Block> sets;
          if (x1) sets.push_back(*x1);
          if (y1) sets.push_back(*y1);
          bad = Witness{{t1, t2}, sets, "no common set through both points"};
          return;
        }
        if (auto w = one_side(t1, t2, *x1, a1, *y1, a2)) bad = w;
        else if (auto w2 = one_side(t2, t1, *y1, a2, *x1, a1)) bad = w2;
      });
    }
    report.results.push_back(bad ? detail::hit("v", *bad) : detail::ok("v"));
  }

  // (vi)
  if (!partitions_ok) {
    report.results.push_back(detail::skipped("vi", "needs (iv)"));
  } else {
    std::optional<Witness> bad;
    for (int t = 0; t < v && !bad; ++t) {
      const auto& mine = at[static_cast<std::size_t>(t)];
      for (std::size_t i = 0; i < mine.size() && !bad; ++i) {
        for (std::size_t j = 0; j < mine.size() && !bad; ++j) {
          if (i == j) continue;
          auto ai = mine[i];
          auto aj = mine[j];
          ai.erase(t);
          aj.erase(t);
          ai.for_each([&](int a) {
            if (bad) return;
            const int n = x.first_associates(a).intersection_size(aj);
            if (n != g - 2) {
              bad = Witness{{t, a}, {mine[j]}, std::to_string(n) + " first associates in the set, expected " +
                                                   std::to_string(g - 2)};
            }
          });
        }
      }
    }
    report.results.push_back(bad ? detail::hit("vi", *bad) : detail::ok("vi"));
  }
  return report;
}

inline PropertyReport check_six_properties(const AssociationScheme& x,
                                           const std::vector<std::vector<Block>>& classes, int g) {
  return check_six_properties(x, classes, g, cliques_of_size(x, detail::order_of(x)));
}

// Conditions (I)..(V); any hit certifies the scheme is not an L_g(s) scheme.
inline PropertyReport detect_violations(const AssociationScheme& x, int g, std::vector<Block> clique_index) {
  const int s = detail::order_of(x);
  const int v = x.v();
  sort_lex(clique_index);
  clique_index.erase(std::unique(clique_index.begin(), clique_index.end()), clique_index.end());
  PropertyReport report;

  // (I)
  {
    const auto classes = enumerate_resolutions(clique_index, s, 1, static_cast<std::size_t>(g) + 1);
    if (static_cast<int>(classes.size()) > g) {
      Witness w{{}, {}, std::to_string(g + 1) + " parallel classifications found"};
      for (const auto& r : classes) w.sets.insert(w.sets.end(), r.classes[0].begin(), r.classes[0].end());
      report.results.push_back(detail::hit("I", w));
    } else {
      report.results.push_back(detail::ok("I", std::to_string(classes.size()) + " parallel classifications"));
    }
  }

  const auto marked = detail::in_some_class(clique_index, s);

  // (II)
  {
    std::optional<Witness> bad;
    for (std::size_t i = 0; i < clique_index.size() && !bad; ++i) {
      if (!marked[i]) continue;
      for (std::size_t j = i + 1; j < clique_index.size() && !bad; ++j) {
        if (!marked[j]) continue;
        const auto meet = clique_index[i] & clique_index[j];
        if (meet.size() > 1 && meet.size() < s) {
          bad = Witness{meet.to_vector(), {clique_index[i], clique_index[j]},
                        "sets from parallel classifications share " + std::to_string(meet.size()) + " points"};
        }
      }
    }
    report.results.push_back(bad ? detail::hit("II", *bad) : detail::ok("II"));
  }

  std::vector<std::vector<NeighborPartition>> parts(static_cast<std::size_t>(v));
  for (int t = 0; t < v; ++t) {
    parts[static_cast<std::size_t>(t)] = neighbor_partitions(x, t, g, detail::through(clique_index, t));
  }

  // (III)
  {
    std::optional<Witness> bad;
    for (int t = 0; t < v && !bad; ++t) {
      const auto& p = parts[static_cast<std::size_t>(t)];
      if (p.size() > 1) {
        Witness w{{t}, p[0], std::to_string(p.size()) + " partitions of the first associates"};
        w.sets.insert(w.sets.end(), p[1].begin(), p[1].end());
        bad = w;
      }
    }
    report.results.push_back(bad ? detail::hit("III", *bad) : detail::ok("III"));
  }

  // (IV)
  {
    const std::string note =
        "evaluated against each point's first partition; a hit is a set from a parallel "
        "classification through the point that is not one of that partition's sets";
    std::optional<Witness> bad;
    for (int t = 0; t < v && !bad; ++t) {
      const auto& p = parts[static_cast<std::size_t>(t)];
      if (p.empty()) continue;
      for (std::size_t i = 0; i < clique_index.size() && !bad; ++i) {
        const auto& c = clique_index[i];
        if (!marked[i] || !c.contains(t)) continue;
        if (std::find(p[0].begin(), p[0].end(), c) == p[0].end()) {
          Witness w{{t}, {c}, "set through the point outside its partition"};
          w.sets.insert(w.sets.end(), p[0].begin(), p[0].end());
          bad = w;
        }
      }
    }
    report.results.push_back(bad ? detail::hit("IV", *bad, note) : detail::ok("IV", note));
  }

  // (V)
  {
    std::optional<Witness> bad;
    for (int t1 = 0; t1 < v && !bad; ++t1) {
      x.first_associates(t1).for_each([&](int t2) {
        if (bad || t2 < t1) return;
        for (const auto& p1 : parts[static_cast<std::size_t>(t1)]) {
          for (const auto& p2 : parts[static_cast<std::size_t>(t2)]) {
            if (bad) return;
            const Block* x2 = detail::block_containing(p1, t2);
            const Block* y3 = detail::block_containing(p2, t1);
            if (!x2 || !y3) continue;
            const int meet = x2->intersection_size(*y3);
            if (meet <= 1 || meet >= s) continue;
            for (const auto& x1 : p1) {
              if (&x1 == x2) continue;
              int disjoint = 0;
              for (const auto& y : p2) {
                if (&y != y3 && !x1.intersects(y)) ++disjoint;
              }
              if (disjoint >= 2) {
                PointSet pair;
                pair.insert(t1);
                pair.insert(t2);
                bad = Witness{{t1, t2}, cliques_containing(clique_index, pair),
                              to_dash(*x2) + " and " + to_dash(*y3) + " share " + std::to_string(meet) +
                                  " points"};
                return;
              }
            }
          }
        }
      });
    }
    report.results.push_back(bad ? detail::hit("V", *bad) : detail::ok("V"));
  }
  return report;
}

inline PropertyReport detect_violations(const AssociationScheme& x, int g) {
  return detect_violations(x, g, cliques_of_size(x, detail::order_of(x)));
}

// (I) and (I') for a pseudo-L_3(s) scheme; certification needs s > 4.
inline PropertyReport check_g3_conditions(const AssociationScheme& x, int s) {
  const auto c = classify_pseudo_lg(x, 3, s);
  if (c.verdict != PseudoLgVerdict::is_pseudo_lg) {
    throw Error(ErrorKind::precondition, "scheme is not a pseudo-L3(" + std::to_string(s) + ") scheme");
  }
  const auto index = cliques_of_size(x, s);
  std::optional<Witness> bad1;
  std::optional<Witness> bad2;
  for (int t = 0; t < x.v() && !bad1 && !bad2; ++t) {
    const auto parts = neighbor_partitions(x, t, 3, detail::through(index, t));
    if (parts.empty()) {
      bad1 = Witness{{t}, {}, "first associates do not split into three cliques"};
      break;
    }
    bool some_good = false;
    for (const auto& p : parts) {
      bool good = true;
      for (std::size_t i = 0; i < 3 && good; ++i) {
        auto mine = p[i];
        mine.erase(t);
        mine.for_each([&](int y) {
          for (std::size_t j = 0; j < 3; ++j) {
            if (j == i) continue;
            auto other = p[j];
            other.erase(t);
            if (x.first_associates(y).intersection_size(other) != 1) good = false;
          }
        });
      }
      if (good) {
        some_good = true;
        break;
      }
    }
    if (!some_good) bad2 = Witness{{t}, parts.front(), "no split has exactly one cross first associate"};
  }
  PropertyReport report;
  report.results.push_back(bad1 ? detail::hit("I", *bad1) : detail::ok("I"));
  if (bad1) {
    report.results.push_back(detail::skipped("I'", "needs (I)"));
  } else {
    report.results.push_back(bad2 ? detail::hit("I'", *bad2) : detail::ok("I'"));
  }
  const bool both = !bad1 && !bad2;
  if (s <= 4) {
    report.results.push_back(detail::skipped("certified", "certification requires s > 4"));
  } else if (both) {
    report.results.push_back(detail::ok("certified", "the scheme is an L3(" + std::to_string(s) + ") scheme"));
  } else {
    report.results.push_back(detail::hit("certified", Witness{{}, {}, "a condition fails"}));
  }
  return report;
}

struct ContainingSets {
  bool unique = false;
  std::vector<Block> sets;
};

inline ContainingSets unique_containing_set(const AssociationScheme& x, int a, int b,
                                            const std::vector<Block>& clique_index) {
  if (a == b || !x.adjacent(a, b)) {
    throw Error(ErrorKind::domain, "treatments " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                       " are not first associates");
  }
  PointSet pair;
  pair.insert(a);
  pair.insert(b);
  auto sets = cliques_containing(clique_index, pair);
  sort_lex(sets);
  for (const auto& c : sets) {
    if (!x.is_clique(c)) throw Error(ErrorKind::invalid_clique, "set " + to_dash(c) + " is not a clique");
  }
  return {sets.size() == 1, std::move(sets)};
}

// For common transversals A, B through t with A n B = {t}, every a in A - {t} has
// exactly (s-1-w)-2 first associates in B - {t} under the induced scheme.
inline PropertyResult check_count_law(const PolSet& pol) {
  const int s = pol.order();
  const int w = pol.size();
  if (s < w + 4) {
    throw Error(ErrorKind::precondition, "count law needs s >= w + 4");
  }
  const auto x = induced_scheme(pol);
  const int expected = s - 1 - w - 2;
  const auto all = common_transversals(pol);
  std::vector<int> lonely;
  std::size_t checked = 0;
  for (int t = 0; t < s * s; ++t) {
    const auto mine = detail::through(all, t);
    if (mine.empty()) {
      lonely.push_back(t);
      continue;
    }
    for (const auto& a_set : mine) {
      for (const auto& b_set : mine) {
        if (a_set.intersection_size(b_set) != 1) continue;
        auto rest_b = b_set;
        rest_b.erase(t);
        std::optional<Witness> bad;
        a_set.for_each([&](int a) {
          if (a == t || bad) return;
          ++checked;
          const int n = x.first_associates(a).intersection_size(rest_b);
          if (n != expected) {
            bad = Witness{{t, a}, {a_set, b_set}, "found " + std::to_string(n) + ", expected " + std::to_string(expected)};
          }
        });
        if (bad) return detail::hit("count_law", *bad);
      }
    }
  }
  std::string note = std::to_string(checked) + " counts checked, each " + std::to_string(expected);
  if (!lonely.empty()) {
    note += "; no common transversal through";
    for (int t : lonely) note += " " + std::to_string(t + 1);
  }
  if (checked == 0) return detail::skipped("count_law", note);
  return detail::ok("count_law", note);
}

}  // namespace mols
