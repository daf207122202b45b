#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mols/error.hpp"
#include "mols/point_set.hpp"

namespace mols {

// The s x s grid of treatments. Internally a cell is the 0-based point i*s + j;
// externally it is the treatment i*s + j + 1.
struct TreatmentGrid {
  int order = 0;

  [[nodiscard]] constexpr int size() const { return order * order; }
  [[nodiscard]] constexpr int point(int row, int col) const { return row * order + col; }
  [[nodiscard]] constexpr int treatment(int row, int col) const { return point(row, col) + 1; }
  [[nodiscard]] constexpr int row(int point) const { return point / order; }
  [[nodiscard]] constexpr int col(int point) const { return point % order; }
  [[nodiscard]] PointSet all_points() const { return PointSet::first_n(size()); }

  // Converts a 1-based treatment to a point, throwing on out-of-range input.
  [[nodiscard]] int point_of_treatment(int treatment) const {
    if (treatment < 1 || treatment > size()) {
      throw Error(ErrorKind::domain, "treatment " + std::to_string(treatment) +
                                         " outside 1.." + std::to_string(size()));
    }
    return treatment - 1;
  }
};

// First ordered symbol pair that occurs twice when two s x s arrays are superimposed.
struct DuplicatePair {
  int first_symbol = 0;
  int second_symbol = 0;
  int first_point = 0;   // earlier cell carrying the pair
  int second_point = 0;  // later cell repeating it
};

// Single pass over an s^2 occupancy table; stops at the first repeated pair.
inline std::optional<DuplicatePair> find_duplicate_pair(std::span<const int> a,
                                                        std::span<const int> b, int order) {
  const auto n = static_cast<std::size_t>(order) * static_cast<std::size_t>(order);
  std::vector<int> seen_at(n, -1);
  for (std::size_t p = 0; p < n; ++p) {
    const auto slot = static_cast<std::size_t>(a[p] * order + b[p]);
    if (seen_at[slot] >= 0) {
      return DuplicatePair{a[p], b[p], seen_at[slot], static_cast<int>(p)};
    }
    seen_at[slot] = static_cast<int>(p);
  }
  return std::nullopt;
}

namespace detail {

inline std::vector<int> flatten_checked(const std::vector<std::vector<int>>& rows) {
  const auto s = rows.size();
  if (s == 0) throw Error(ErrorKind::malformed_input, "empty matrix");
  if (s > static_cast<std::size_t>(kMaxOrder)) {
    throw Error(ErrorKind::malformed_input,
                "order " + std::to_string(s) + " exceeds supported maximum " +
                    std::to_string(kMaxOrder));
  }
  std::vector<int> flat;
  flat.reserve(s * s);
  for (std::size_t i = 0; i < s; ++i) {
    if (rows[i].size() != s) {
      throw Error(ErrorKind::malformed_input, "row " + std::to_string(i) + " has " +
                                                  std::to_string(rows[i].size()) +
                                                  " entries, expected " + std::to_string(s));
    }
    for (std::size_t j = 0; j < s; ++j) {
      const int x = rows[i][j];
      if (x < 0 || x >= static_cast<int>(s)) {
        throw Error(ErrorKind::malformed_input,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                        std::to_string(x) + " outside [0," + std::to_string(s - 1) + "]");
      }
      flat.push_back(x);
    }
  }
  return flat;
}

// Row-constant matrix C (row i all i) and column-constant matrix D (column j all j).
inline std::vector<int> row_constant(int s) {
  std::vector<int> c(static_cast<std::size_t>(s * s));
  for (int p = 0; p < s * s; ++p) c[static_cast<std::size_t>(p)] = p / s;
  return c;
}

inline std::vector<int> column_constant(int s) {
  std::vector<int> d(static_cast<std::size_t>(s * s));
  for (int p = 0; p < s * s; ++p) d[static_cast<std::size_t>(p)] = p % s;
  return d;
}

}  // namespace detail

// A matrix over {0..s-1} is Latin iff it is orthogonal to both the row-constant
// matrix C and the column-constant matrix D.
inline bool is_latin(const std::vector<std::vector<int>>& rows) {
  const auto flat = detail::flatten_checked(rows);
  const int s = static_cast<int>(rows.size());
  return !find_duplicate_pair(detail::row_constant(s), flat, s) &&
         !find_duplicate_pair(detail::column_constant(s), flat, s);
}

class LatinSquare {
 public:
  // Throws malformed_input for bad shape/range and not_latin otherwise.
  explicit LatinSquare(const std::vector<std::vector<int>>& rows)
      : order_(static_cast<int>(rows.size())), cells_(detail::flatten_checked(rows)) {
    if (!is_latin(rows)) throw Error(ErrorKind::not_latin, "matrix is not a Latin square");
  }

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] int at(int row, int col) const {
    return cells_[static_cast<std::size_t>(row * order_ + col)];
  }
  [[nodiscard]] int at(int point) const { return cells_[static_cast<std::size_t>(point)]; }
  [[nodiscard]] std::span<const int> cells() const { return cells_; }

  [[nodiscard]] std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(order_));
    for (int i = 0; i < order_; ++i) {
      out[static_cast<std::size_t>(i)].assign(cells_.begin() + i * order_,
                                              cells_.begin() + (i + 1) * order_);
    }
    return out;
  }

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  int order_;
  std::vector<int> cells_;
};

inline std::optional<DuplicatePair> orthogonality_witness(const LatinSquare& a,
                                                          const LatinSquare& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorKind::dimension, "order mismatch: " + std::to_string(a.order()) + " vs " +
                                          std::to_string(b.order()));
  }
  return find_duplicate_pair(a.cells(), b.cells(), a.order());
}

inline bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  return !orthogonality_witness(a, b).has_value();
}

// The s points of the grid whose cell holds `symbol` in `square`.
inline PointSet symbol_class(const LatinSquare& square, int symbol) {
  const int s = square.order();
  if (symbol < 0 || symbol >= s) {
    throw Error(ErrorKind::domain, "symbol " + std::to_string(symbol) + " outside [0," +
                                       std::to_string(s - 1) + "]");
  }
  PointSet out;
  for (int p = 0; p < s * s; ++p) {
    if (square.at(p) == symbol) out.insert(p);
  }
  return out;
}

// Raised by PolSet::validate. Exactly one of square_index / pair is set.
class PolValidationError : public Error {
 public:
  PolValidationError(ErrorKind kind, const std::string& what, std::optional<int> square_index,
                     std::optional<std::pair<int, int>> pair,
                     std::optional<DuplicatePair> witness)
      : Error(kind, what), square_index(square_index), pair(pair), witness(witness) {}

  std::optional<int> square_index;
  std::optional<std::pair<int, int>> pair;
  std::optional<DuplicatePair> witness;
};

// An ordered set of pairwise orthogonal Latin squares of one order.
class PolSet {
 public:
  static PolSet validate(std::vector<LatinSquare> squares) {
    if (squares.empty()) throw Error(ErrorKind::malformed_input, "no squares supplied");
    const int s = squares.front().order();
    for (std::size_t k = 0; k < squares.size(); ++k) {
      if (squares[k].order() != s) {
        throw PolValidationError(ErrorKind::dimension,
                                 "square " + std::to_string(k) + " has order " +
                                     std::to_string(squares[k].order()) + ", expected " +
                                     std::to_string(s),
                                 static_cast<int>(k), std::nullopt, std::nullopt);
      }
    }
    for (std::size_t i = 0; i < squares.size(); ++i) {
      for (std::size_t j = i + 1; j < squares.size(); ++j) {
        if (auto dup = orthogonality_witness(squares[i], squares[j])) {
          throw PolValidationError(
              ErrorKind::not_orthogonal,
              "squares (" + std::to_string(i) + "," + std::to_string(j) +
                  ") are not orthogonal: symbol pair (" + std::to_string(dup->first_symbol) +
                  "," + std::to_string(dup->second_symbol) + ") repeats at treatments " +
                  std::to_string(dup->first_point + 1) + " and " +
                  std::to_string(dup->second_point + 1),
              std::nullopt, std::pair{static_cast<int>(i), static_cast<int>(j)}, dup);
        }
      }
    }
    return PolSet(s, std::move(squares));
  }

  // The grid alone, w = 0.
  static PolSet empty(int order) {
    if (order < 1 || order > kMaxOrder) {
      throw Error(ErrorKind::malformed_input, "order " + std::to_string(order) + " unsupported");
    }
    return PolSet(order, {});
  }

  // Validating builder from raw matrices; a non-Latin matrix reports its index.
  static PolSet from_matrices(const std::vector<std::vector<std::vector<int>>>& matrices) {
    std::vector<LatinSquare> squares;
    squares.reserve(matrices.size());
    for (std::size_t k = 0; k < matrices.size(); ++k) {
      try {
        squares.emplace_back(matrices[k]);
      } catch (const Error& e) {
        throw PolValidationError(e.kind(), "square " + std::to_string(k) + ": " + e.what(),
                                 static_cast<int>(k), std::nullopt, std::nullopt);
      }
    }
    return validate(std::move(squares));
  }

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] int size() const { return static_cast<int>(squares_.size()); }
  [[nodiscard]] const std::vector<LatinSquare>& squares() const { return squares_; }
  [[nodiscard]] const LatinSquare& operator[](int k) const {
    return squares_[static_cast<std::size_t>(k)];
  }
  [[nodiscard]] TreatmentGrid grid() const { return TreatmentGrid{order_}; }

  // First k squares as a set of their own.
  [[nodiscard]] PolSet prefix(int k) const {
    return PolSet(order_, {squares_.begin(), squares_.begin() + k});
  }

  // This set with one more square; throws not_orthogonal with the failing pair.
  [[nodiscard]] PolSet with(LatinSquare extra) const {
    auto squares = squares_;
    squares.push_back(std::move(extra));
    return validate(std::move(squares));
  }

 private:
  PolSet(int order, std::vector<LatinSquare> squares)
      : order_(order), squares_(std::move(squares)) {}

  int order_;
  std::vector<LatinSquare> squares_;
};

}  // namespace mols
