#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "mols/io.hpp"
#include "mols/latin.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(MOLS_TEST_DATA) + "/" + name; }

inline std::vector<std::vector<std::vector<int>>> matrices(const std::string& name) {
  std::ifstream in(path(name));
  return mols::parse_squares(in);
}

inline mols::PolSet pol(const std::string& name) {
  return mols::PolSet::from_matrices(matrices(name));
}

// Printed squares followed by the squares the paper adds.
inline mols::PolSet full(const std::string& stem) {
  auto m = matrices(stem + ".txt");
  auto added = matrices(stem + "_added.txt");
  m.insert(m.end(), added.begin(), added.end());
  return mols::PolSet::from_matrices(m);
}

}  // namespace fixtures
