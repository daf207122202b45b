#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mols/extend.hpp"
#include "mols/io.hpp"
#include "mols/net.hpp"
#include "mols/resolution.hpp"
#include "mols/scheme.hpp"
#include "mols/verifier.hpp"

namespace mols {

using Json = nlohmann::ordered_json;

inline Json points_json(const std::vector<int>& points) {
  Json out = Json::array();
  for (int p : points) out.push_back(p + 1);
  return out;
}

inline Json blocks_json(const std::vector<Block>& blocks) {
  Json out = Json::array();
  for (const auto& b : blocks) out.push_back(to_dash(b));
  return out;
}

inline Json to_json(const SchemeParameters& p) {
  return Json{{"v", p.v},         {"n1", p.n1},       {"n2", p.n2},
              {"p11^1", p.p11_1}, {"p12^1", p.p12_1}, {"p22^1", p.p22_1},
              {"p11^2", p.p11_2}, {"p12^2", p.p12_2}, {"p22^2", p.p22_2}};
}

inline Json to_json(const ParameterFailure& f) {
  Json out{{"quantity", f.quantity}, {"expected", f.expected}, {"found", f.found}};
  if (f.a >= 0) out["a"] = f.a + 1;
  if (f.b >= 0) out["b"] = f.b + 1;
  out["message"] = f.describe();
  return out;
}

inline Json to_json(const AssociationScheme& x, bool with_adjacency) {
  Json out{{"v", x.v()}};
  const auto params = compute_parameters(x);
  if (const auto* p = std::get_if<SchemeParameters>(&params)) {
    out["parameters"] = to_json(*p);
  } else {
    out["parameters"] = nullptr;
    out["failure"] = to_json(std::get<ParameterFailure>(params));
  }
  if (with_adjacency) {
    Json adj = Json::array();
    for (int a = 0; a < x.v(); ++a) adj.push_back(points_json(x.first_associates(a).to_vector()));
    out["adjacency"] = std::move(adj);
  }
  return out;
}

inline Json to_json(const PseudoLgWitness& w) {
  Json out{{"g", w.g}, {"s", w.s}, {"verdict", std::string(to_string(w.verdict))}};
  if (w.counterexample) out["counterexample"] = to_json(*w.counterexample);
  return out;
}

inline Json to_json(const Net& net) {
  Json classes = Json::array();
  for (const auto& cls : net.classes()) classes.push_back(blocks_json(cls));
  return Json{{"order", net.order()}, {"degree", net.degree()}, {"classes", std::move(classes)}};
}

inline Json to_json(const Resolution& r) {
  Json classes = Json::array();
  for (const auto& cls : r.classes) classes.push_back(blocks_json(cls));
  return Json{{"order", r.order}, {"degree", r.degree()}, {"classes", std::move(classes)}};
}

inline Resolution resolution_from_json(const Json& j) {
  try {
    Resolution r{j.at("order").get<int>(), {}};
    const int v = r.order * r.order;
    for (const auto& cls : j.at("classes")) {
      std::vector<Block> blocks;
      for (const auto& text : cls) {
        Block b;
        for (int p : parse_treatment_list(text.get<std::string>(), v)) b.insert(p);
        blocks.push_back(b);
      }
      r.classes.push_back(std::move(blocks));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("resolution JSON: ") + e.what());
  }
}

inline Json to_json(const PropertyResult& r) {
  Json out{{"name", r.name}, {"verdict", std::string(to_string(r.verdict))}};
  if (r.witness) {
    out["witness"] = Json{{"points", points_json(r.witness->points)},
                          {"sets", blocks_json(r.witness->sets)},
                          {"detail", r.witness->detail}};
  }
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

inline Json to_json(const PropertyReport& report) {
  Json out = Json::array();
  for (const auto& r : report.results) out.push_back(to_json(r));
  return out;
}

// Certificate of a completion: the resolution and which class produced which square.
inline Json certificate_json(const ExtensionResult& r) {
  Json out{{"status", std::string(to_string(r.status))}, {"order", r.input.order()}, {"input_squares", r.input.size()}};
  if (r.certificate) {
    out["resolution"] = to_json(*r.certificate);
    Json prov = Json::array();
    for (std::size_t k = 0; k < r.certificate->classes.size(); ++k) {
      prov.push_back(Json{{"square", r.input.size() + static_cast<int>(k) + 1}, {"class", k + 1}});
    }
    out["provenance"] = std::move(prov);
  }
  return out;
}

}  // namespace mols
