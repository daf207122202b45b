#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mols/error.hpp"
#include "mols/io.hpp"
#include "mols/latin.hpp"
#include "mols/resolution.hpp"
#include "mols/transversal.hpp"

namespace mols {

// Block m of the class (lexicographic order) becomes symbol m.
inline LatinSquare square_from_class(const TreatmentGrid& grid, std::vector<Block> parallel_class) {
  const int s = grid.order;
  sort_lex(parallel_class);
  std::vector<int> cells(static_cast<std::size_t>(grid.size()), -1);
  if (static_cast<int>(parallel_class.size()) != s) {
    throw Error(ErrorKind::structural, "class has " + std::to_string(parallel_class.size()) + " blocks, expected " +
                                           std::to_string(s));
  }
  for (int m = 0; m < s; ++m) {
    const auto& b = parallel_class[static_cast<std::size_t>(m)];
    bool fits = b.size() == s && b.is_subset_of(grid.all_points());
    b.for_each([&](int p) {
      if (p >= grid.size()) return;
      auto& c = cells[static_cast<std::size_t>(p)];
      if (c >= 0) fits = false;
      c = m;
    });
    if (!fits) throw Error(ErrorKind::structural, "block " + to_dash(b) + " overlaps the class or has the wrong size");
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) rows[static_cast<std::size_t>(i)].push_back(cells[static_cast<std::size_t>(grid.point(i, j))]);
  }
  try {
    return LatinSquare(rows);
  } catch (const Error& e) {
    throw Error(ErrorKind::structural, std::string("class does not give a Latin square: ") + e.what());
  }
}

inline PolSet extend_by_one(const PolSet& pol, const std::vector<Block>& parallel_class) {
  auto square = square_from_class(pol.grid(), parallel_class);
  try {
    return pol.with(std::move(square));
  } catch (const Error& e) {
    throw Error(ErrorKind::internal_consistency, std::string("new square breaks the set: ") + e.what());
  }
}

enum class ExtensionStatus { completed, no_resolution, not_applicable };

inline std::string_view to_string(ExtensionStatus s) {
  switch (s) {
    case ExtensionStatus::completed: return "completed";
    case ExtensionStatus::no_resolution: return "no_resolution";
    case ExtensionStatus::not_applicable: return "not_applicable";
  }
  return "unknown";
}

struct ExtensionResult {
  PolSet input;
  std::vector<LatinSquare> added;
  std::optional<Resolution> certificate;
  ExtensionStatus status = ExtensionStatus::not_applicable;

  // Input squares followed by the added ones.
  [[nodiscard]] std::vector<LatinSquare> all_squares() const {
    auto out = input.squares();
    out.insert(out.end(), added.begin(), added.end());
    return out;
  }
};

inline ExtensionResult complete_pol(const PolSet& pol, unsigned threads = 1) {
  const int s = pol.order();
  const int w = pol.size();
  ExtensionResult out{pol, {}, std::nullopt, ExtensionStatus::not_applicable};
  if (w < 1 || s < w + 4) return out;
  auto r = find_resolution(pol, s - 1 - w, threads);
  if (!r) {
    out.status = ExtensionStatus::no_resolution;
    return out;
  }
  auto grown = pol;
  for (const auto& cls : r->classes) {
    grown = extend_by_one(grown, cls);
    out.added.push_back(grown[grown.size() - 1]);
  }
  // Revalidate every pair from scratch.
  (void)PolSet::validate(out.all_squares());
  out.certificate = std::move(r);
  out.status = ExtensionStatus::completed;
  return out;
}

}  // namespace mols
