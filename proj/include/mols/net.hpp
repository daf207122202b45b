#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mols/error.hpp"
#include "mols/io.hpp"
#include "mols/latin.hpp"
#include "mols/point_set.hpp"
#include "mols/resolution.hpp"
#include "mols/scheme.hpp"
#include "mols/transversal.hpp"

namespace mols {

// Two lines of different classes that do not meet in exactly one point.
struct LineConflict {
  int class_a = 0;
  int line_a = 0;
  int class_b = 0;
  int line_b = 0;
  PointSet meet;
};

class Net {
 public:
  // Throws structural if the classes do not form a net of the given order.
  Net(int order, std::vector<std::vector<Block>> classes)
      : order_(order), classes_(std::move(classes)) {
    if (auto bad = shape_problem(); !bad.empty()) throw Error(ErrorKind::structural, bad);
    if (auto c = first_conflict()) throw Error(ErrorKind::structural, describe(*c));
    index_lines();
  }

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] int degree() const { return static_cast<int>(classes_.size()); }
  [[nodiscard]] const std::vector<std::vector<Block>>& classes() const { return classes_; }

  // Index of the line of class c through point p.
  [[nodiscard]] int line_through(int c, int p) const {
    return line_of_[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)];
  }

  [[nodiscard]] bool joined(int p, int q) const {
    const int v = order_ * order_;
    if (p < 0 || q < 0 || p >= v || q >= v) {
      throw Error(ErrorKind::domain, "point outside 1.." + std::to_string(v));
    }
    if (p == q) throw Error(ErrorKind::domain, "joined() needs two distinct points");
    for (int c = 0; c < degree(); ++c) {
      if (line_through(c, p) == line_through(c, q)) return true;
    }
    return false;
  }

  // True if `block` meets every line of the net in exactly one point.
  [[nodiscard]] bool is_transversal(const PointSet& block) const {
    if (block.size() != order_) return false;
    for (const auto& cls : classes_) {
      for (const auto& line : cls) {
        if (line.intersection_size(block) != 1) return false;
      }
    }
    return true;
  }

  [[nodiscard]] std::string describe(const LineConflict& c) const {
    return "line " + std::to_string(c.line_a + 1) + " of class " + std::to_string(c.class_a + 1) +
           " meets line " + std::to_string(c.line_b + 1) + " of class " +
           std::to_string(c.class_b + 1) + " in " + std::to_string(c.meet.size()) + " points";
  }

  [[nodiscard]] std::optional<LineConflict> first_conflict() const {
    for (std::size_t a = 0; a < classes_.size(); ++a) {
      for (std::size_t b = a + 1; b < classes_.size(); ++b) {
        for (std::size_t i = 0; i < classes_[a].size(); ++i) {
          for (std::size_t j = 0; j < classes_[b].size(); ++j) {
            const auto meet = classes_[a][i] & classes_[b][j];
            if (meet.size() != 1) {
              return LineConflict{static_cast<int>(a), static_cast<int>(i), static_cast<int>(b),
                                  static_cast<int>(j), meet};
            }
          }
        }
      }
    }
    return std::nullopt;
  }

 private:
  [[nodiscard]] std::string shape_problem() const {
    if (order_ < 1 || order_ > kMaxOrder) return "unsupported order " + std::to_string(order_);
    const auto all = PointSet::first_n(order_ * order_);
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      const auto& cls = classes_[c];
      if (static_cast<int>(cls.size()) != order_) {
        return "class " + std::to_string(c + 1) + " has " + std::to_string(cls.size()) + " lines";
      }
      PointSet covered;
      for (const auto& line : cls) {
        if (line.size() != order_ || covered.intersects(line) || !line.is_subset_of(all)) {
          return "class " + std::to_string(c + 1) + " is not a partition into lines of " +
                 std::to_string(order_) + " points";
        }
        covered |= line;
      }
      if (covered != all) return "class " + std::to_string(c + 1) + " misses points";
    }
    return {};
  }

  void index_lines() {
    line_of_.assign(classes_.size(), std::vector<int>(static_cast<std::size_t>(order_ * order_), -1));
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      for (std::size_t i = 0; i < classes_[c].size(); ++i) {
        classes_[c][i].for_each([&](int p) { line_of_[c][static_cast<std::size_t>(p)] = static_cast<int>(i); });
      }
    }
  }

  int order_;
  std::vector<std::vector<Block>> classes_;
  std::vector<std::vector<int>> line_of_;
};

// Rows, then columns, then the symbol classes of each square in turn.
inline Net net_from_pol(const PolSet& pol) {
  const int s = pol.order();
  const auto grid = pol.grid();
  std::vector<std::vector<Block>> classes(2, std::vector<Block>(static_cast<std::size_t>(s)));
  for (int p = 0; p < grid.size(); ++p) {
    classes[0][static_cast<std::size_t>(grid.row(p))].insert(p);
    classes[1][static_cast<std::size_t>(grid.col(p))].insert(p);
  }
  for (const auto& sq : pol.squares()) {
    std::vector<Block> cls;
    for (int x = 0; x < s; ++x) cls.push_back(symbol_class(sq, x));
    classes.push_back(std::move(cls));
  }
  return Net(s, std::move(classes));
}

inline AssociationScheme scheme_from_net(const Net& net) {
  const int v = net.order() * net.order();
  std::vector<PointSet> rows(static_cast<std::size_t>(v));
  for (int p = 0; p < v; ++p) {
    for (int c = 0; c < net.degree(); ++c) {
      rows[static_cast<std::size_t>(p)] |=
          net.classes()[static_cast<std::size_t>(c)][static_cast<std::size_t>(net.line_through(c, p))];
    }
    rows[static_cast<std::size_t>(p)].erase(p);
  }
  return AssociationScheme(std::move(rows));
}

// Points are joined in N* exactly when they are not joined in N.
class PseudoNet {
 public:
  explicit PseudoNet(const Net& base) : base_(base) {}

  [[nodiscard]] const Net& base() const { return base_; }
  [[nodiscard]] bool joined(int p, int q) const { return !base_.joined(p, q); }
  [[nodiscard]] AssociationScheme scheme() const { return induce_complement(scheme_from_net(base_)); }

 private:
  const Net& base_;
};

// The net whose lines are the resolution's blocks; each must be a transversal of `net`.
inline Net complementary_net(const Net& net, const Resolution& resolution) {
  if (resolution.order != net.order()) {
    throw Error(ErrorKind::incompatibility, "resolution order " + std::to_string(resolution.order) +
                                                " differs from net order " + std::to_string(net.order()));
  }
  for (std::size_t c = 0; c < resolution.classes.size(); ++c) {
    for (std::size_t i = 0; i < resolution.classes[c].size(); ++i) {
      const auto& block = resolution.classes[c][i];
      if (!net.is_transversal(block)) {
        throw Error(ErrorKind::incompatibility, "block " + to_dash(block) + " of class " +
                                                    std::to_string(c + 1) +
                                                    " is not a transversal of the net");
      }
    }
  }
  try {
    return Net(resolution.order, resolution.classes);
  } catch (const Error& e) {
    throw Error(ErrorKind::incompatibility, e.what());
  }
}

}  // namespace mols
