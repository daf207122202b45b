#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mols {

enum class ErrorKind {
  malformed_input,
  dimension,
  not_latin,
  not_orthogonal,
  invalid_anchor,
  malformed_relation,
  domain,
  invalid_clique,
  structural,
  incompatibility,
  precondition,
  internal_consistency,
  parse,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::malformed_input: return "malformed-input";
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::not_latin: return "not-latin";
    case ErrorKind::not_orthogonal: return "not-orthogonal";
    case ErrorKind::invalid_anchor: return "invalid-anchor";
    case ErrorKind::malformed_relation: return "malformed-relation";
    case ErrorKind::domain: return "domain";
    case ErrorKind::invalid_clique: return "invalid-clique";
    case ErrorKind::structural: return "structural";
    case ErrorKind::incompatibility: return "incompatibility";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::internal_consistency: return "internal-consistency";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mols
