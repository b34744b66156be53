// JSON for a solved generator basis. The graph is embedded so a basis file
// is self-contained:
//   {"graph": {...}, "cutoff": D, "mode": "Z"|"Q",
//    "generators": {v: {w: "polynomial"}}}
#pragma once

#include <string>

#include "gkm/graph_io.hpp"
#include "gkm/solver.hpp"

namespace gkm {

inline Json to_json(const GeneratorBasis& b) {
  Json j;
  j["graph"] = to_json(b.graph);
  j["cutoff"] = b.cutoff;
  j["mode"] = to_string(b.mode);
  Json gens = Json::object();
  for (const auto& v : b.graph.vertices()) {
    auto it = b.generators.find(v.id);
    if (it == b.generators.end()) continue;
    Json vals = Json::object();
    for (const auto& w : b.graph.vertices()) vals[w.id] = it->second.at(w.id).str();
    gens[v.id] = std::move(vals);
  }
  j["generators"] = std::move(gens);
  return j;
}

inline GeneratorBasis basis_from_json(const Json& j) {
  try {
    GkmGraph g = graph_from_json(j.at("graph"));
    GeneratorBasis b{g, j.at("cutoff").get<long>(), parse_mode(j.value("mode", std::string("Z"))), {}};
    for (const auto& [vid, vals] : j.at("generators").items()) {
      if (!g.contains(vid)) throw IoError("generator for unknown vertex '" + vid + "'");
      CohClass f = class_from_json(vals, g.rank());
      f.degree = g.vertex(vid).cell_dim / 2;
      for (const auto& w : g.vertices())
        if (!f.values.count(w.id)) throw IoError("generator f_" + vid + " has no value at '" + w.id + "'");
      b.generators.emplace(vid, std::move(f));
    }
    return b;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed basis JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw IoError(std::string("malformed basis JSON: ") + e.what());
  }
}

inline GeneratorBasis load_basis(const std::string& path) { return basis_from_json(parse_json(read_text(path), path)); }

inline void save_basis(const std::string& path, const GeneratorBasis& b) { write_text(path, dump(to_json(b))); }

}  // namespace gkm
