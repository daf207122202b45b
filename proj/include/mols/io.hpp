#pragma once

#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mols/error.hpp"
#include "mols/latin.hpp"
#include "mols/point_set.hpp"

namespace mols {

enum class SymbolStyle { digits, letters };

namespace detail {

inline std::string trim(std::string_view sv) {
  const auto b = sv.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = sv.find_last_not_of(" \t\r");
  return std::string(sv.substr(b, e - b + 1));
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

[[noreturn]] inline void parse_fail(int line_no, const std::string& msg) {
  throw Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": " + msg);
}

inline std::optional<int> to_int(std::string_view tok) {
  int v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

}  // namespace detail

// Raw matrices from the multi-square text format. Symbols are validated for
// range only; Latin-ness is left to LatinSquare / PolSet.
inline std::vector<std::vector<std::vector<int>>> parse_squares(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(detail::trim(l));
  while (!lines.empty() && lines.back().empty()) lines.pop_back();

  std::size_t i = 0;
  while (i < lines.size() && lines[i].empty()) ++i;
  if (i == lines.size()) throw Error(ErrorKind::parse, "line 1: empty input");

  const auto order = detail::to_int(lines[i]);
  if (!order || *order < 1 || *order > kMaxOrder) {
    detail::parse_fail(static_cast<int>(i + 1), "expected order in 1.." +
                                                    std::to_string(kMaxOrder) + ", got '" +
                                                    lines[i] + "'");
  }
  const int s = *order;
  ++i;

  std::optional<SymbolStyle> style;
  std::vector<std::vector<std::vector<int>>> squares;
  while (i < lines.size()) {
    if (!squares.empty()) {
      if (!lines[i].empty()) {
        detail::parse_fail(static_cast<int>(i + 1), "expected blank line between squares");
      }
      ++i;
      if (i < lines.size() && lines[i].empty()) {
        detail::parse_fail(static_cast<int>(i + 1), "squares must be separated by exactly one blank line");
      }
    }
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < s; ++r, ++i) {
      const int line_no = static_cast<int>(i + 1);
      if (i >= lines.size() || lines[i].empty()) {
        detail::parse_fail(line_no, "square " + std::to_string(squares.size()) + " truncated: expected " +
                                        std::to_string(s) + " rows, got " + std::to_string(r));
      }
      const auto toks = detail::split_ws(lines[i]);
      if (static_cast<int>(toks.size()) != s) {
        detail::parse_fail(line_no, "expected " + std::to_string(s) + " symbols, got " +
                                        std::to_string(toks.size()));
      }
      std::vector<int> row;
      for (const auto& tok : toks) {
        SymbolStyle this_style{};
        int value = 0;
        if (tok.size() == 1 && tok[0] >= 'a' && tok[0] <= 'z') {
          this_style = SymbolStyle::letters;
          value = tok[0] - 'a';
        } else if (auto v = detail::to_int(tok)) {
          this_style = SymbolStyle::digits;
          value = *v;
        } else {
          detail::parse_fail(line_no, "bad symbol '" + tok + "'");
        }
        if (style && *style != this_style) {
          detail::parse_fail(line_no, "letter and digit symbols mixed");
        }
        style = this_style;
        if (value < 0 || value >= s) {
          detail::parse_fail(line_no, "symbol '" + tok + "' outside the alphabet of order " +
                                          std::to_string(s));
        }
        row.push_back(value);
      }
      rows.push_back(std::move(row));
    }
    squares.push_back(std::move(rows));
  }
  if (squares.empty()) detail::parse_fail(static_cast<int>(i + 1), "no squares after order line");
  return squares;
}

inline std::vector<std::vector<std::vector<int>>> parse_squares(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_squares(in);
}

inline PolSet read_pol(std::istream& in) { return PolSet::from_matrices(parse_squares(in)); }

inline std::string format_squares(const std::vector<LatinSquare>& squares,
                                  SymbolStyle style = SymbolStyle::digits) {
  std::ostringstream out;
  if (squares.empty()) return {};
  const int s = squares.front().order();
  out << s << '\n';
  for (std::size_t k = 0; k < squares.size(); ++k) {
    if (k > 0) out << '\n';
    for (int r = 0; r < s; ++r) {
      for (int c = 0; c < s; ++c) {
        if (c > 0) out << ' ';
        const int x = squares[k].at(r, c);
        if (style == SymbolStyle::letters) {
          out << static_cast<char>('a' + x);
        } else {
          out << x;
        }
      }
      out << '\n';
    }
  }
  return out.str();
}

// "1-7-13-19-25" from a 0-based point set.
inline std::string to_dash(const PointSet& points) {
  std::string out;
  points.for_each([&](int p) {
    if (!out.empty()) out += '-';
    out += std::to_string(p + 1);
  });
  return out;
}

// 1-based treatments separated by '-' or ',' into 0-based points.
inline std::vector<int> parse_treatment_list(std::string_view text, int v) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find_first_of("-,", pos);
    if (next == std::string_view::npos) next = text.size();
    const auto tok = detail::trim(text.substr(pos, next - pos));
    if (tok.empty()) {
      if (text.empty()) break;
      throw Error(ErrorKind::parse, "empty treatment in '" + std::string(text) + "'");
    }
    const auto t = detail::to_int(tok);
    if (!t || *t < 1 || *t > v) {
      throw Error(ErrorKind::parse, "treatment '" + tok + "' outside 1.." + std::to_string(v));
    }
    out.push_back(*t - 1);
    pos = next + 1;
  }
  return out;
}

// Edge list: one "a b" pair of 1-based points per line; '#' starts a comment.
inline std::vector<std::pair<int, int>> parse_edge_list(std::istream& in, int v) {
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  for (std::string l; std::getline(in, l);) {
    ++line_no;
    if (auto hash = l.find('#'); hash != std::string::npos) l.erase(hash);
    const auto toks = detail::split_ws(l);
    if (toks.empty()) continue;
    if (toks.size() != 2) detail::parse_fail(line_no, "expected two points");
    const auto a = detail::to_int(toks[0]);
    const auto b = detail::to_int(toks[1]);
    if (!a || !b || *a < 1 || *b < 1 || *a > v || *b > v) {
      detail::parse_fail(line_no, "points must lie in 1.." + std::to_string(v));
    }
    edges.emplace_back(*a - 1, *b - 1);
  }
  return edges;
}

}  // namespace mols
