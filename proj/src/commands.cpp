#include "commands.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mols/json_io.hpp"
#include "mols/mols.hpp"

namespace forge {
namespace {

using mols::Json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mols::Error(mols::ErrorKind::malformed_input, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Letters in, letters out.
mols::SymbolStyle style_of(const std::string& text) {
  const auto body = text.substr(std::min(text.find('\n'), text.size()));
  for (char c : body) {
    if (std::isalpha(static_cast<unsigned char>(c))) return mols::SymbolStyle::letters;
  }
  return mols::SymbolStyle::digits;
}

mols::PolSet load_pol(const std::string& path) { return mols::PolSet::from_matrices(mols::parse_squares(slurp(path))); }

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw mols::Error(mols::ErrorKind::malformed_input, "cannot write " + path);
    }
    out_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& get() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

int order_of(int v) {
  const int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(v))));
  if (s * s != v) throw mols::Error(mols::ErrorKind::dimension, std::to_string(v) + " points is not a square grid");
  return s;
}

struct LoadedScheme {
  mols::AssociationScheme scheme;
  std::optional<mols::PolSet> pol;
  int s = 0;
  int g = -1;
};

LoadedScheme load_scheme(const Options& o) {
  if (!o.edges.empty()) {
    if (o.points < 1) throw mols::Error(mols::ErrorKind::malformed_input, "--edges needs --points");
    std::istringstream in(slurp(o.edges));
    auto x = mols::AssociationScheme::from_edges(o.points, mols::parse_edge_list(in, o.points));
    if (o.induced) x = mols::induce_complement(x);
    return {std::move(x), std::nullopt, order_of(o.points), o.g};
  }
  auto pol = load_pol(o.input);
  const int s = pol.order();
  const int w = pol.size();
  auto x = o.induced ? mols::induced_scheme(pol) : mols::build_lg_scheme(pol);
  const int g = o.g >= 0 ? o.g : (o.induced ? s - 1 - w : w + 2);
  return {std::move(x), std::move(pol), s, g};
}

std::vector<int> through_points(const Options& o, const mols::PolSet& pol) {
  return o.through.empty() ? std::vector<int>{} : mols::parse_treatment_list(o.through, pol.grid().size());
}

void print_resolution(std::ostream& out, const mols::Resolution& r) {
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    out << "class " << c + 1 << ":";
    for (const auto& b : r.classes[c]) out << ' ' << mols::to_dash(b);
    out << '\n';
  }
}

void print_report(std::ostream& out, const std::string& title, const mols::PropertyReport& report) {
  out << title << '\n';
  for (const auto& r : report.results) {
    out << "  (" << r.name << ") " << mols::to_string(r.verdict);
    if (r.witness) {
      out << ": " << r.witness->detail;
      if (!r.witness->points.empty()) {
        out << " at";
        for (int p : r.witness->points) out << ' ' << p + 1;
      }
      for (const auto& b : r.witness->sets) out << " {" << mols::to_dash(b) << '}';
    }
    if (!r.note.empty()) out << " [" << r.note << ']';
    out << '\n';
  }
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const mols::Error& e) {
    err << "error (" << mols::to_string(e.kind()) << "): " << e.what() << '\n';
    return invalid;
  }
}

}  // namespace

unsigned default_threads() {
  const char* env = std::getenv("MOLS_FORGE_THREADS");
  if (!env) return 0;
  char* end = nullptr;
  const unsigned long n = std::strtoul(env, &end, 10);
  return end != env && *end == '\0' ? static_cast<unsigned>(n) : 0U;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto matrices = mols::parse_squares(slurp(o.input));
    const auto n = matrices.size();
    const int s = static_cast<int>(matrices.front().size());
    std::vector<bool> latin(n);
    std::vector<std::vector<int>> flat(n);
    for (std::size_t k = 0; k < n; ++k) {
      latin[k] = mols::is_latin(matrices[k]);
      for (const auto& row : matrices[k]) flat[k].insert(flat[k].end(), row.begin(), row.end());
    }
    // 1 orthogonal, 0 not, -1 undefined.
    std::vector<std::vector<int>> orth(n, std::vector<int>(n, -1));
    std::vector<std::string> problems;
    for (std::size_t k = 0; k < n; ++k) {
      if (!latin[k]) problems.push_back("L" + std::to_string(k + 1) + " is not a Latin square");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!latin[i] || !latin[j]) continue;
        const auto dup = mols::find_duplicate_pair(flat[i], flat[j], s);
        orth[i][j] = orth[j][i] = dup ? 0 : 1;
        if (dup) {
          problems.push_back("L" + std::to_string(i + 1) + " and L" + std::to_string(j + 1) +
                             " are not orthogonal: pair (" + std::to_string(dup->first_symbol) + "," +
                             std::to_string(dup->second_symbol) + ") repeats at treatments " +
                             std::to_string(dup->first_point + 1) + " and " + std::to_string(dup->second_point + 1));
        }
      }
    }
    const bool valid = problems.empty();
    if (o.json) {
      Json j{{"order", s}, {"squares", n}};
      j["latin"] = latin;
      Json m = Json::array();
      for (const auto& row : orth) {
        Json r = Json::array();
        for (int x : row) r.push_back(x < 0 ? Json(nullptr) : Json(x == 1));
        m.push_back(std::move(r));
      }
      j["orthogonal"] = std::move(m);
      j["valid"] = valid;
      j["problems"] = problems;
      out << j.dump(2) << '\n';
    } else {
      out << "order " << s << ", " << n << " square" << (n == 1 ? "" : "s") << '\n';
      for (std::size_t k = 0; k < n; ++k) out << "L" << k + 1 << ": " << (latin[k] ? "latin" : "not latin") << '\n';
      if (n > 1) {
        out << "orthogonality:\n    ";
        for (std::size_t j = 0; j < n; ++j) out << " L" << j + 1;
        out << '\n';
        for (std::size_t i = 0; i < n; ++i) {
          out << "  L" << i + 1;
          for (std::size_t j = 0; j < n; ++j) {
            const int x = orth[i][j];
            out << "  " << (i == j ? '.' : x < 0 ? '?' : x == 1 ? 'y' : 'n');
          }
          out << '\n';
        }
      }
      for (const auto& p : problems) out << p << '\n';
      if (valid) out << "valid POL(" << s << "," << n << ")\n";
    }
    return valid ? ok : invalid;
  });
}

int cmd_transversals(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto pol = load_pol(o.input);
    const auto through = through_points(o, pol);
    mols::require_partial_transversal(pol, through);
    Sink sink(o.output, out);
    if (o.count_only) {
      const auto n = mols::count_transversals(pol, through, o.threads);
      if (o.json) {
        sink.get() << Json{{"count", n}}.dump(2) << '\n';
      } else {
        sink.get() << n << '\n';
      }
      return ok;
    }
    const auto all = mols::common_transversals(pol, through, o.threads);
    if (o.json) {
      sink.get() << Json{{"count", all.size()}, {"transversals", mols::blocks_json(all)}}.dump(2) << '\n';
    } else {
      for (const auto& t : all) sink.get() << mols::to_dash(t) << '\n';
    }
    return ok;
  });
}

int cmd_scheme(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto loaded = load_scheme(o);
    std::optional<mols::PseudoLgWitness> cls;
    if (loaded.g >= 1) cls = mols::classify_pseudo_lg(loaded.scheme, loaded.g, loaded.s);
    Sink sink(o.output, out);
    if (o.json) {
      auto j = mols::to_json(loaded.scheme, o.adjacency);
      if (cls) j["classification"] = mols::to_json(*cls);
      sink.get() << j.dump(2) << '\n';
      return ok;
    }
    auto& os = sink.get();
    os << "v = " << loaded.scheme.v() << '\n';
    const auto params = mols::compute_parameters(loaded.scheme);
    if (const auto* p = std::get_if<mols::SchemeParameters>(&params)) {
      os << "n1 = " << p->n1 << ", n2 = " << p->n2 << '\n'
         << "p11^1 = " << p->p11_1 << ", p12^1 = " << p->p12_1 << ", p22^1 = " << p->p22_1 << '\n'
         << "p11^2 = " << p->p11_2 << ", p12^2 = " << p->p12_2 << ", p22^2 = " << p->p22_2 << '\n';
    } else {
      os << "not an association scheme: " << std::get<mols::ParameterFailure>(params).describe() << '\n';
    }
    if (cls) {
      os << "pseudo-L" << cls->g << "(" << cls->s << "): " << mols::to_string(cls->verdict);
      if (cls->verdict == mols::PseudoLgVerdict::wrong_parameters) os << " (" << cls->counterexample->describe() << ")";
      os << '\n';
    }
    if (o.adjacency) {
      for (int a = 0; a < loaded.scheme.v(); ++a) {
        os << a + 1 << ":";
        loaded.scheme.first_associates(a).for_each([&](int b) { os << ' ' << b + 1; });
        os << '\n';
      }
    }
    return ok;
  });
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto loaded = load_scheme(o);
    if (loaded.g < 1) throw mols::Error(mols::ErrorKind::malformed_input, "verify needs a positive --g");
    const auto index = mols::cliques_of_size(loaded.scheme, loaded.s, o.threads);
    std::vector<std::pair<std::string, mols::PropertyReport>> sections;
    sections.emplace_back("violations", mols::detect_violations(loaded.scheme, loaded.g, index));
    if (loaded.g == 3 &&
        mols::classify_pseudo_lg(loaded.scheme, 3, loaded.s).verdict == mols::PseudoLgVerdict::is_pseudo_lg) {
      sections.emplace_back("g3", mols::check_g3_conditions(loaded.scheme, loaded.s));
    }
    if (!o.classification.empty()) {
      const auto r = mols::resolution_from_json(Json::parse(slurp(o.classification)));
      sections.emplace_back("six_properties", mols::check_six_properties(loaded.scheme, r.classes, loaded.g, index));
    }
    if (o.count_law) {
      if (!loaded.pol) throw mols::Error(mols::ErrorKind::precondition, "--count-law needs a square file");
      sections.emplace_back("count_law", mols::PropertyReport{{mols::check_count_law(*loaded.pol)}});
    }
    std::optional<mols::ContainingSets> containing;
    std::vector<int> pair;
    if (!o.pair.empty()) {
      pair = mols::parse_treatment_list(o.pair, loaded.scheme.v());
      if (pair.size() != 2) throw mols::Error(mols::ErrorKind::malformed_input, "--pair needs two treatments");
      containing = mols::unique_containing_set(loaded.scheme, pair[0], pair[1], index);
    }
    Sink sink(o.output, out);
    if (o.json) {
      Json j = Json::object();
      j["cliques"] = index.size();
      for (const auto& [name, rep] : sections) j[name] = mols::to_json(rep);
      if (containing) {
        j["pair"] = Json{{"a", pair[0] + 1},
                         {"b", pair[1] + 1},
                         {"unique", containing->unique},
                         {"sets", mols::blocks_json(containing->sets)}};
      }
      sink.get() << j.dump(2) << '\n';
    } else {
      sink.get() << index.size() << " cliques of size " << loaded.s << '\n';
      for (const auto& [name, rep] : sections) print_report(sink.get(), name, rep);
      if (containing) {
        sink.get() << "sets through " << pair[0] + 1 << " and " << pair[1] + 1 << ": " << containing->sets.size()
                   << (containing->unique ? " (unique)" : "") << '\n';
        for (const auto& b : containing->sets) sink.get() << "  " << mols::to_dash(b) << '\n';
      }
    }
    return ok;
  });
}

int cmd_resolve(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto pol = load_pol(o.input);
    const int d = o.degree >= 0 ? o.degree : pol.order() - 1 - pol.size();
    Sink sink(o.output, out);
    if (o.count_only) {
      const auto n = mols::count_resolutions(pol, d, o.limit == 0 ? SIZE_MAX : o.limit, o.threads);
      if (o.json) {
        sink.get() << Json{{"degree", d}, {"count", n}}.dump(2) << '\n';
      } else {
        sink.get() << n << '\n';
      }
      return n == 0 ? no_resolution : ok;
    }
    const auto found = mols::enumerate_resolutions(pol, d, o.limit == 0 ? SIZE_MAX : o.limit, o.threads);
    if (o.json) {
      Json list = Json::array();
      for (const auto& r : found) list.push_back(mols::to_json(r));
      sink.get() << (o.limit == 1 && !found.empty() ? list[0] : list).dump(2) << '\n';
    } else {
      for (std::size_t k = 0; k < found.size(); ++k) {
        if (found.size() > 1) sink.get() << "resolution " << k + 1 << '\n';
        print_resolution(sink.get(), found[k]);
      }
    }
    if (found.empty()) err << "no resolution of degree " << d << '\n';
    return found.empty() ? no_resolution : ok;
  });
}

int cmd_complete(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto text = slurp(o.input);
    const auto pol = mols::PolSet::from_matrices(mols::parse_squares(text));
    const auto r = mols::complete_pol(pol, o.threads);
    if (!o.emit.empty()) {
      Sink cert(o.emit, out);
      cert.get() << mols::certificate_json(r).dump(2) << '\n';
    }
    if (r.status == mols::ExtensionStatus::not_applicable) {
      err << "not applicable: order " << pol.order() << " with " << pol.size()
          << " squares needs order >= squares + 4\n";
      return not_applicable;
    }
    if (r.status == mols::ExtensionStatus::no_resolution) {
      err << "no resolution of the common transversals into " << pol.order() - 1 - pol.size() << " classes\n";
      return no_resolution;
    }
    Sink sink(o.output, out);
    sink.get() << mols::format_squares(r.all_squares(), style_of(text));
    return ok;
  });
}

}  // namespace forge
