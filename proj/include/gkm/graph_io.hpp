// JSON interchange for graphs and cohomology classes.
//
// Graph schema:
//   {"rank": k, "mode": "Z"|"Q",
//    "vertices": [{"id", "cell_dim", "position"?, "label"?}],
//    "edges": [{"from", "to", "weight": [ints]}],
//    "projection"?: [[x, y] per torus coordinate],
//    "cartan"?: [[ints]], "parabolic"?: [ints]}
// Output is written in canonical order, so load/save is byte-stable.
#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gkm/graph.hpp"

namespace gkm {

using Json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Integral values that fit in 64 bits become JSON numbers, everything else
/// a string in the polynomial coefficient grammar ("-3/4").
inline Json rational_to_json(const Rational& r) {
  if (is_integer(r)) {
    const Integer& n = numerator(r);
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
      return static_cast<long long>(n);
  }
  return to_string(r);
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(Integer(s));
      return Rational(Integer(s.substr(0, slash))) / Rational(Integer(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw IoError("invalid rational '" + s + "'");
    }
  }
  throw IoError("expected an integer or rational string, got " + j.dump());
}

inline Json weight_to_json(const Weight& w) {
  Json a = Json::array();
  for (const auto& c : w.coeffs()) a.push_back(rational_to_json(Rational(c)));
  return a;
}

inline Weight weight_from_json(const Json& j) {
  if (!j.is_array()) throw IoError("weight must be an array of integers");
  std::vector<Integer> cs;
  for (const auto& x : j) {
    const Rational r = rational_from_json(x);
    if (!is_integer(r)) throw IoError("weight entries must be integers");
    cs.push_back(numerator(r));
  }
  return Weight(std::move(cs));
}

inline Json to_json(const GkmGraph& g) {
  Json j;
  j["rank"] = g.rank();
  j["mode"] = to_string(g.mode());
  Json vs = Json::array();
  for (const auto& v : g.vertices()) {
    Json o;
    o["id"] = v.id;
    o["cell_dim"] = v.cell_dim;
    if (v.position) {
      Json p = Json::array();
      for (const auto& c : *v.position) p.push_back(rational_to_json(c));
      o["position"] = std::move(p);
    }
    if (v.label) o["label"] = *v.label;
    vs.push_back(std::move(o));
  }
  j["vertices"] = std::move(vs);
  Json es = Json::array();
  for (const auto& e : g.edges()) {
    Json o;
    o["from"] = e.from;
    o["to"] = e.to;
    o["weight"] = weight_to_json(e.weight);
    es.push_back(std::move(o));
  }
  j["edges"] = std::move(es);
  if (g.projection()) {
    Json p = Json::array();
    for (const auto& [x, y] : *g.projection()) p.push_back(Json::array({x, y}));
    j["projection"] = std::move(p);
  }
  if (g.origin()) {
    j["cartan"] = g.origin()->cartan;
    j["parabolic"] = g.origin()->parabolic;
  }
  return j;
}

inline GkmGraph graph_from_json(const Json& j) {
  try {
    const auto rank = j.at("rank").get<std::size_t>();
    const auto mode = parse_mode(j.value("mode", std::string("Z")));
    std::vector<Vertex> vs;
    for (const auto& o : j.at("vertices")) {
      Vertex v;
      v.id = o.at("id").get<std::string>();
      v.cell_dim = o.at("cell_dim").get<int>();
      if (o.contains("position")) {
        std::vector<Rational> p;
        for (const auto& c : o.at("position")) p.push_back(rational_from_json(c));
        v.position = std::move(p);
      }
      if (o.contains("label")) v.label = o.at("label").get<std::string>();
      vs.push_back(std::move(v));
    }
    std::vector<Edge> es;
    for (const auto& o : j.at("edges"))
      es.push_back({o.at("from").get<std::string>(), o.at("to").get<std::string>(), weight_from_json(o.at("weight"))});
    GkmGraph g(rank, mode, std::move(vs), std::move(es));
    if (j.contains("projection")) {
      std::vector<std::pair<double, double>> p;
      for (const auto& xy : j.at("projection")) p.emplace_back(xy.at(0).get<double>(), xy.at(1).get<double>());
      g.set_projection(std::move(p));
    }
    if (j.contains("cartan"))
      g.set_origin({j.at("cartan").get<std::vector<std::vector<long long>>>(),
                    j.value("parabolic", std::vector<int>{})});
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed graph JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw IoError(std::string("malformed graph JSON: ") + e.what());
  }
}

/// {"degree"?: d, "values": {vertex: "polynomial"}}
inline Json to_json(const CohClass& f, const GkmGraph& g) {
  Json j;
  if (f.degree) j["degree"] = *f.degree;
  Json vals = Json::object();
  for (const auto& v : g.vertices()) {
    auto it = f.values.find(v.id);
    if (it != f.values.end()) vals[v.id] = it->second.str();
  }
  j["values"] = std::move(vals);
  return j;
}

inline CohClass class_from_json(const Json& j, std::size_t nvars) {
  try {
    CohClass f;
    const Json& vals = j.contains("values") ? j.at("values") : j;
    for (const auto& [id, p] : vals.items()) f.values.emplace(id, parse_polynomial(p.get<std::string>(), nvars));
    if (j.contains("degree")) f.degree = j.at("degree").get<long>();
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed class JSON: ") + e.what());
  } catch (const PolynomialParseError& e) {
    throw IoError(e.what());
  }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

/// Reads a file, or stdin for "-" or an empty path.
inline std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
}

inline Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("cannot parse " + what + ": " + e.what());
  }
}

inline GkmGraph load_graph(const std::string& path) { return graph_from_json(parse_json(read_text(path), path)); }

inline void save_graph(const std::string& path, const GkmGraph& g) { write_text(path, dump(to_json(g))); }

}  // namespace gkm
