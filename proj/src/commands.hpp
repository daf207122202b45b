#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

namespace forge {

enum ExitCode : int { ok = 0, invalid = 1, no_resolution = 2, not_applicable = 3 };

struct Options {
  std::string input;
  std::string output;  // empty: stdout
  std::string through;
  std::string emit;
  std::string edges;
  std::string pair;
  std::string classification;
  bool count_only = false;
  bool json = false;
  bool induced = false;
  bool adjacency = false;
  bool count_law = false;
  unsigned threads = 0;
  std::size_t limit = 1;
  int degree = -1;
  int g = -1;
  int points = -1;
};

int cmd_check(const Options& o, std::ostream& out, std::ostream& err);
int cmd_transversals(const Options& o, std::ostream& out, std::ostream& err);
int cmd_scheme(const Options& o, std::ostream& out, std::ostream& err);
int cmd_verify(const Options& o, std::ostream& out, std::ostream& err);
int cmd_resolve(const Options& o, std::ostream& out, std::ostream& err);
int cmd_complete(const Options& o, std::ostream& out, std::ostream& err);

// Thread count from MOLS_FORGE_THREADS, 0 when unset or unreadable.
unsigned default_threads();

}  // namespace forge
