#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mols/error.hpp"
#include "mols/latin.hpp"
#include "mols/point_set.hpp"

namespace mols {

// Symmetric irreflexive first-associate relation on v <= kMaxPoints points.
class AssociationScheme {
 public:
  AssociationScheme() = default;

  explicit AssociationScheme(std::vector<PointSet> first) : first_(std::move(first)) {
    const int v = this->v();
    if (v > kMaxPoints) {
      throw Error(ErrorKind::malformed_relation, "too many points: " + std::to_string(v));
    }
    const auto all = PointSet::first_n(v);
    for (int a = 0; a < v; ++a) {
      const auto& row = first_[static_cast<std::size_t>(a)];
      if (row.contains(a)) {
        throw Error(ErrorKind::malformed_relation,
                    "point " + std::to_string(a + 1) + " is its own first associate");
      }
      if (!row.is_subset_of(all)) {
        throw Error(ErrorKind::malformed_relation,
                    "point " + std::to_string(a + 1) + " has an associate outside 1.." + std::to_string(v));
      }
      row.for_each([&](int b) {
        if (!first_[static_cast<std::size_t>(b)].contains(a)) {
          throw Error(ErrorKind::malformed_relation, "relation not symmetric at (" +
                                                         std::to_string(a + 1) + "," +
                                                         std::to_string(b + 1) + ")");
        }
      });
    }
  }

  // Symmetric closure of a 0-based edge list.
  static AssociationScheme from_edges(int v, const std::vector<std::pair<int, int>>& edges) {
    std::vector<PointSet> rows(static_cast<std::size_t>(v));
    for (auto [a, b] : edges) {
      if (a == b) {
        throw Error(ErrorKind::malformed_relation, "loop at point " + std::to_string(a + 1));
      }
      rows[static_cast<std::size_t>(a)].insert(b);
      rows[static_cast<std::size_t>(b)].insert(a);
    }
    return AssociationScheme(std::move(rows));
  }

  [[nodiscard]] int v() const { return static_cast<int>(first_.size()); }
  [[nodiscard]] bool adjacent(int a, int b) const {
    return first_[static_cast<std::size_t>(a)].contains(b);
  }
  [[nodiscard]] const PointSet& first_associates(int a) const {
    return first_[static_cast<std::size_t>(a)];
  }
  [[nodiscard]] PointSet second_associates(int a) const {
    auto out = PointSet::first_n(v()) - first_[static_cast<std::size_t>(a)];
    out.erase(a);
    return out;
  }
  [[nodiscard]] bool is_clique(const PointSet& points) const {
    bool ok = true;
    points.for_each([&](int p) {
      auto others = points;
      others.erase(p);
      if (!others.is_subset_of(first_[static_cast<std::size_t>(p)])) ok = false;
    });
    return ok;
  }

  friend bool operator==(const AssociationScheme&, const AssociationScheme&) = default;

 private:
  std::vector<PointSet> first_;
};

struct SchemeParameters {
  int v = 0;
  int n1 = 0;
  int n2 = 0;
  int p11_1 = 0;
  int p12_1 = 0;
  int p22_1 = 0;
  int p11_2 = 0;
  int p12_2 = 0;
  int p22_2 = 0;

  friend bool operator==(const SchemeParameters&, const SchemeParameters&) = default;
};

// The counting identities every two-class scheme satisfies.
inline bool parameters_consistent(const SchemeParameters& p) {
  return p.v == p.n1 + p.n2 + 1 && p.n1 * p.p12_1 == p.n2 * p.p11_2 &&
         1 + p.p11_1 + p.p12_1 == p.n1 && p.p12_2 + p.p22_2 + 1 == p.n2;
}

// First point (or pair, a < b) where a count stops being constant.
struct ParameterFailure {
  std::string quantity;  // "n1", "p11^1", ...
  int a = 0;
  int b = -1;            // -1 for point-level quantities
  int expected = 0;
  int found = 0;

  [[nodiscard]] std::string describe() const {
    std::string where = b < 0 ? "point " + std::to_string(a + 1)
                              : "pair (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
    return quantity + " not constant at " + where + ": expected " + std::to_string(expected) +
           ", found " + std::to_string(found);
  }
};

using ParameterResult = std::variant<SchemeParameters, ParameterFailure>;

inline ParameterResult compute_parameters(const AssociationScheme& x) {
  const int v = x.v();
  SchemeParameters out;
  out.v = v;
  if (v == 0) return out;
  out.n1 = x.first_associates(0).size();
  for (int a = 1; a < v; ++a) {
    const int d = x.first_associates(a).size();
    if (d != out.n1) return ParameterFailure{"n1", a, -1, out.n1, d};
  }
  out.n2 = v - 1 - out.n1;

  const auto all = PointSet::first_n(v);
  std::optional<std::array<int, 3>> seen[2];
  const char* names[2][3] = {{"p11^1", "p12^1", "p22^1"}, {"p11^2", "p12^2", "p22^2"}};
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      auto others = all;
      others.erase(a);
      others.erase(b);
      const auto na = x.first_associates(a) & others;
      const auto nb = x.first_associates(b) & others;
      const auto sa = others - na;
      const auto sb = others - nb;
      const std::array<int, 3> counts{na.intersection_size(nb), na.intersection_size(sb),
                                      sa.intersection_size(sb)};
      const int cls = x.adjacent(a, b) ? 0 : 1;
      auto& ref = seen[cls];
      if (!ref) {
        ref = counts;
        continue;
      }
      for (int k = 0; k < 3; ++k) {
        if (counts[static_cast<std::size_t>(k)] != (*ref)[static_cast<std::size_t>(k)]) {
          return ParameterFailure{names[cls][k], a, b, (*ref)[static_cast<std::size_t>(k)],
                                  counts[static_cast<std::size_t>(k)]};
        }
      }
    }
  }
  if (const auto& c = seen[0]) {
    out.p11_1 = (*c)[0];
    out.p12_1 = (*c)[1];
    out.p22_1 = (*c)[2];
  }
  if (const auto& c = seen[1]) {
    out.p11_2 = (*c)[0];
    out.p12_2 = (*c)[1];
    out.p22_2 = (*c)[2];
  }
  return out;
}

// Parameters of any pseudo-L_g(s) scheme.
inline SchemeParameters lg_parameters(int g, int s) {
  SchemeParameters p;
  p.v = s * s;
  p.n1 = g * (s - 1);
  p.n2 = p.v - 1 - p.n1;
  p.p11_1 = (s - 2) + (g - 1) * (g - 2);
  p.p12_1 = p.n1 - 1 - p.p11_1;
  p.p22_1 = p.n2 - p.p12_1;
  p.p11_2 = g * (g - 1);
  p.p12_2 = p.n1 - p.p11_2;
  p.p22_2 = p.n2 - 1 - p.p12_2;
  return p;
}

// First associates: same row, same column, or same symbol in some square.
inline AssociationScheme build_lg_scheme(const PolSet& pol) {
  const auto grid = pol.grid();
  const int v = grid.size();
  std::vector<PointSet> rows(static_cast<std::size_t>(v));
  for (int a = 0; a < v; ++a) {
    for (int b = 0; b < v; ++b) {
      if (a == b) continue;
      bool joined = grid.row(a) == grid.row(b) || grid.col(a) == grid.col(b);
      for (int k = 0; k < pol.size() && !joined; ++k) joined = pol[k].at(a) == pol[k].at(b);
      if (joined) rows[static_cast<std::size_t>(a)].insert(b);
    }
  }
  return AssociationScheme(std::move(rows));
}

// First and second associates swapped.
inline AssociationScheme induce_complement(const AssociationScheme& x) {
  std::vector<PointSet> rows(static_cast<std::size_t>(x.v()));
  for (int a = 0; a < x.v(); ++a) rows[static_cast<std::size_t>(a)] = x.second_associates(a);
  return AssociationScheme(std::move(rows));
}

// The pseudo-L*[s-1-w](s) scheme of a POL(s,w).
inline AssociationScheme induced_scheme(const PolSet& pol) {
  return induce_complement(build_lg_scheme(pol));
}

enum class PseudoLgVerdict { is_pseudo_lg, not_scheme, wrong_parameters };

inline std::string_view to_string(PseudoLgVerdict v) {
  switch (v) {
    case PseudoLgVerdict::is_pseudo_lg: return "is_pseudo_Lg";
    case PseudoLgVerdict::not_scheme: return "not_scheme";
    case PseudoLgVerdict::wrong_parameters: return "wrong_parameters";
  }
  return "unknown";
}

struct PseudoLgWitness {
  int g = 0;
  int s = 0;
  PseudoLgVerdict verdict = PseudoLgVerdict::not_scheme;
  std::optional<ParameterFailure> counterexample;
  std::optional<SchemeParameters> parameters;
};

inline PseudoLgWitness classify_pseudo_lg(const AssociationScheme& x, int g, int s) {
  if (x.v() != s * s) {
    throw Error(ErrorKind::dimension, "scheme has " + std::to_string(x.v()) + " points, expected " +
                                          std::to_string(s * s));
  }
  PseudoLgWitness w{g, s, PseudoLgVerdict::not_scheme, std::nullopt, std::nullopt};
  const auto result = compute_parameters(x);
  if (const auto* f = std::get_if<ParameterFailure>(&result)) {
    w.counterexample = *f;
    return w;
  }
  const auto& p = std::get<SchemeParameters>(result);
  w.parameters = p;
  if (p.n2 == 0 || p.n1 == 0) {
    w.counterexample = ParameterFailure{p.n2 == 0 ? "n2" : "n1", 0, -1, 1, 0};
    return w;
  }
  const auto want = lg_parameters(g, s);
  const std::pair<const char*, std::pair<int, int>> checks[] = {
      {"n1", {want.n1, p.n1}}, {"p11^1", {want.p11_1, p.p11_1}}, {"p11^2", {want.p11_2, p.p11_2}}};
  w.verdict = PseudoLgVerdict::is_pseudo_lg;
  for (const auto& [name, vals] : checks) {
    if (vals.first != vals.second) {
      w.verdict = PseudoLgVerdict::wrong_parameters;
      w.counterexample = ParameterFailure{name, -1, -1, vals.first, vals.second};
      break;
    }
  }
  return w;
}

// 2s >= g^4 - 2g^3 + 2g^2 + g, in exact integers.
inline bool bruck_bound_holds(std::int64_t g, std::int64_t s) {
  if (g < 1) throw Error(ErrorKind::domain, "degree must be positive");
  return 2 * s >= g * g * g * g - 2 * g * g * g + 2 * g * g + g;
}

}  // namespace mols
