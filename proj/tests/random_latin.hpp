#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace testgen {

using Matrix = std::vector<std::vector<int>>;

// Random isotope of the cyclic group table: permute rows, columns and symbols.
inline Matrix random_latin(int s, std::mt19937& rng) {
  std::vector<int> r(static_cast<std::size_t>(s)), c(r), x(r);
  std::iota(r.begin(), r.end(), 0);
  std::iota(c.begin(), c.end(), 0);
  std::iota(x.begin(), x.end(), 0);
  std::shuffle(r.begin(), r.end(), rng);
  std::shuffle(c.begin(), c.end(), rng);
  std::shuffle(x.begin(), x.end(), rng);
  Matrix m(static_cast<std::size_t>(s), std::vector<int>(static_cast<std::size_t>(s)));
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          x[static_cast<std::size_t>((r[static_cast<std::size_t>(i)] + c[static_cast<std::size_t>(j)]) % s)];
    }
  }
  return m;
}

// Random isotope of Z_2^k when s is a power of two, else of Z_s; has an orthogonal mate unless s = 2 mod 4.
inline Matrix group_isotope(int s, std::mt19937& rng) {
  const bool xor_table = (s & (s - 1)) == 0;
  std::vector<int> r(static_cast<std::size_t>(s)), c(r), x(r);
  std::iota(r.begin(), r.end(), 0);
  std::iota(c.begin(), c.end(), 0);
  std::iota(x.begin(), x.end(), 0);
  std::shuffle(r.begin(), r.end(), rng);
  std::shuffle(c.begin(), c.end(), rng);
  std::shuffle(x.begin(), x.end(), rng);
  Matrix m(static_cast<std::size_t>(s), std::vector<int>(static_cast<std::size_t>(s)));
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      const int a = r[static_cast<std::size_t>(i)];
      const int b = c[static_cast<std::size_t>(j)];
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          x[static_cast<std::size_t>(xor_table ? (a ^ b) : (a + b) % s)];
    }
  }
  return m;
}

// Jacobson-Matthews walk on the incidence cube, started from the cyclic square.
inline Matrix walked_latin(int s, std::mt19937& rng, int steps = -1) {
  const auto n = static_cast<std::size_t>(s);
  std::vector<int> cube(n * n * n, 0);
  auto at = [&](int r, int c, int x) -> int& {
    return cube[(static_cast<std::size_t>(r) * n + static_cast<std::size_t>(c)) * n + static_cast<std::size_t>(x)];
  };
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) at(r, c, (r + c) % s) = 1;
  }
  std::uniform_int_distribution<int> pick(0, s - 1);
  std::bernoulli_distribution coin(0.5);
  // The k-th (k = 0 or 1) index with a 1 along a line.
  auto nth_one = [&](auto&& cell, bool second) {
    int seen = 0;
    for (int i = 0; i < s; ++i) {
      if (cell(i) == 1 && seen++ == static_cast<int>(second)) return i;
    }
    for (int i = 0; i < s; ++i) {
      if (cell(i) == 1) return i;
    }
    return -1;
  };
  if (steps < 0) steps = s * s * s;
  bool proper = true;
  int r = 0, c = 0, x = 0;
  for (int step = 0; step < steps || !proper; ++step) {
    if (proper) {
      do {
        r = pick(rng);
        c = pick(rng);
        x = pick(rng);
      } while (at(r, c, x) != 0);
    }
    const bool twice = !proper;
    const int r2 = nth_one([&](int i) { return at(i, c, x); }, twice && coin(rng));
    const int c2 = nth_one([&](int i) { return at(r, i, x); }, twice && coin(rng));
    const int x2 = nth_one([&](int i) { return at(r, c, i); }, twice && coin(rng));
    ++at(r, c, x);
    --at(r, c2, x);
    --at(r2, c, x);
    --at(r, c, x2);
    ++at(r2, c2, x);
    ++at(r2, c, x2);
    ++at(r, c2, x2);
    --at(r2, c2, x2);
    proper = at(r2, c2, x2) >= 0;
    r = r2;
    c = c2;
    x = x2;
  }
  Matrix m(n, std::vector<int>(n));
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      for (int k = 0; k < s; ++k) {
        if (at(i, j, k) == 1) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
      }
    }
  }
  return m;
}

// Uniform entries in [0, s-1]; almost never Latin for s >= 3.
inline Matrix random_matrix(int s, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, s - 1);
  Matrix m(static_cast<std::size_t>(s), std::vector<int>(static_cast<std::size_t>(s)));
  for (auto& row : m) {
    for (auto& e : row) e = d(rng);
  }
  return m;
}

// A Latin square with two random cells swapped; Latin only if the swap is trivial.
inline Matrix perturbed_latin(int s, std::mt19937& rng) {
  auto m = random_latin(s, rng);
  std::uniform_int_distribution<int> d(0, s - 1);
  std::swap(m[static_cast<std::size_t>(d(rng))][static_cast<std::size_t>(d(rng))],
            m[static_cast<std::size_t>(d(rng))][static_cast<std::size_t>(d(rng))]);
  return m;
}

// Per-row and per-column permutation check, independent of the library.
inline bool direct_is_latin(const Matrix& m) {
  const auto s = m.size();
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<bool> row(s), col(s);
    for (std::size_t j = 0; j < s; ++j) {
      const auto a = static_cast<std::size_t>(m[i][j]);
      const auto b = static_cast<std::size_t>(m[j][i]);
      if (row[a] || col[b]) return false;
      row[a] = col[b] = true;
    }
  }
  return true;
}

}  // namespace testgen
