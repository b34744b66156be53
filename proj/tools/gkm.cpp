// gkm: command-line front end for building GKM graphs, solving for the
// canonical generators and inspecting the resulting ring.
//
// Exit codes: 0 success, 1 validation or check failure, 2 NoSolution /
// NotInSpan, 3 NonIntegral in Z-mode, 4 I/O, parse or usage errors.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gkm/gkm.hpp"

namespace {

using namespace gkm;

constexpr int kOk = 0, kFailed = 1, kNoSolution = 2, kNonIntegral = 3, kIoError = 4;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<long long> parse_int_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t"), e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    try {
      std::size_t used = 0;
      const std::string t = tok.substr(b, e - b + 1);
      out.push_back(std::stoll(t, &used));
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::logic_error&) {
      throw UsageError("expected a comma-separated integer list, got '" + s + "'");
    }
  }
  return out;
}

// "1,0;2,1;0,3" -> weights
std::vector<Weight> parse_weight_list(const std::string& s) {
  std::vector<Weight> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    const auto xs = parse_int_list(tok);
    if (xs.empty()) continue;
    std::vector<Integer> cs(xs.begin(), xs.end());
    out.emplace_back(std::move(cs));
  }
  return out;
}

CoefficientMode mode_arg(const std::string& s) {
  try {
    return parse_mode(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

/// Cartan matrix (and optional parabolic / degree) from a JSON file: either a
/// bare matrix or {"cartan": [[...]], "parabolic": [...], "degree": D}.
struct GcmConfig {
  coxeter::CartanMatrix cartan;
  std::set<int> parabolic;
  std::optional<std::size_t> degree;
};

GcmConfig load_gcm(const std::string& path) {
  const Json j = parse_json(read_text(path), path);
  GcmConfig c;
  try {
    const Json& m = j.is_array() ? j : j.at("cartan");
    c.cartan = coxeter::CartanMatrix(m.get<std::vector<std::vector<long long>>>());
    if (j.is_object() && j.contains("parabolic"))
      for (int i : j.at("parabolic").get<std::vector<int>>()) c.parabolic.insert(i);
    if (j.is_object() && j.contains("degree")) c.degree = j.at("degree").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed GCM file '" + path + "': " + e.what());
  }
  return c;
}

void print_lines(std::ostream& os, const std::vector<std::string>& lines) {
  for (const auto& l : lines) os << l << "\n";
}

// ---------------------------------------------------------------------------
// Subcommands

struct BuildArgs {
  std::string preset;
  std::string gcm;
  std::string parabolic;
  bool parabolic_given = false;
  std::optional<std::size_t> degree;
  std::string mode;
  std::string points;
  std::string out = "-";
  bool list = false;
};

int run_build(const BuildArgs& a) {
  if (a.list) {
    for (const auto& p : presets())
      std::cout << p.name << "\t" << p.default_degree << "\t" << p.description << "\n";
    std::cout << "chain\t-\tcomplete graph on --points, labels c_j - c_i\n";
    return kOk;
  }
  GkmGraph g;
  if (!a.gcm.empty()) {
    if (!a.preset.empty()) throw UsageError("give either a preset or --gcm, not both");
    GcmConfig c = load_gcm(a.gcm);
    if (a.parabolic_given) {
      c.parabolic.clear();
      for (long long i : parse_int_list(a.parabolic)) c.parabolic.insert(static_cast<int>(i));
    }
    const std::size_t degree = a.degree.value_or(c.degree.value_or(3));
    g = build_embedded({c.cartan, c.parabolic, degree}, a.mode.empty() ? CoefficientMode::Z : mode_arg(a.mode));
  } else if (a.preset == "chain") {
    if (a.points.empty()) throw UsageError("the chain preset needs --points \"x,y;x,y;...\"");
    g = build_chain_graph(parse_weight_list(a.points), a.mode.empty() ? CoefficientMode::Q : mode_arg(a.mode));
  } else if (!a.preset.empty()) {
    if (auto d = preset_flag_data(a.preset, a.degree)) {
      g = build_embedded(*d, a.mode.empty() ? CoefficientMode::Z : mode_arg(a.mode));
    } else {
      g = build_preset(a.preset, a.degree);
      if (!a.mode.empty()) {
        GkmGraph h(g.rank(), mode_arg(a.mode), g.vertices(), g.edges());
        h.copy_metadata(g);
        g = std::move(h);
      }
    }
  } else {
    throw UsageError("build needs a preset name or --gcm FILE (see build --list)");
  }
  save_graph(a.out, g);
  return kOk;
}

int run_validate(const std::string& path) {
  const auto rep = validate(load_graph(path));
  print_lines(std::cout, rep.lines());
  return rep.passed() ? kOk : kFailed;
}

struct GeneratorsArgs {
  std::string graph = "-";
  std::optional<long> degree;
  std::string mode;
  std::string out = "-";
  bool verify = false;
};

int run_generators(const GeneratorsArgs& a) {
  const GkmGraph g = load_graph(a.graph);
  SolverOptions opt;
  if (!a.mode.empty()) opt.mode = mode_arg(a.mode);
  const long cutoff = a.degree.value_or(std::max(0, g.max_cell_dim() / 2));
  const auto basis = canonical_generators(g, cutoff, opt);
  if (a.verify) {
    const auto rep = verify_generator_conditions(basis);
    print_lines(std::cerr, rep.lines());
    if (!rep.passed()) return kFailed;
  }
  save_basis(a.out, basis);
  return kOk;
}

int run_check(const std::string& graph_path, const std::string& class_path) {
  const GkmGraph g = load_graph(graph_path);
  const CohClass f = class_from_json(parse_json(read_text(class_path), class_path), g.rank());
  for (const auto& v : g.vertices()) f.at(v.id);
  const auto chk = is_gkm_class(g, f);
  if (chk.ok) {
    std::cout << "PASS class satisfies the congruence on all " << g.edge_count() << " edges\n";
    return kOk;
  }
  const auto& e = g.edges()[*chk.failing_edge];
  const Polynomial diff = f.at(e.from).extended(g.rank()) - f.at(e.to).extended(g.rank());
  std::cout << "FAIL edge " << e.from << "--" << e.to << ": f(" << e.from << ") - f(" << e.to << ") = " << diff.str()
            << " is not divisible by " << Polynomial::from_weight(e.weight).str() << "\n";
  return kFailed;
}

struct MultiplyArgs {
  std::string basis;
  std::string v, w;
};

int run_multiply(const MultiplyArgs& a) {
  const GeneratorBasis b = load_basis(a.basis);
  const CohClass prod = multiply(b.at(a.v), b.at(a.w));
  const Expansion e = expand_in_basis(prod, b);
  Json j;
  j["product"] = to_json(prod, b.graph);
  Json coeffs = Json::object(), red = Json::object();
  const auto r = ordinary_reduction(e);
  for (const auto& vert : b.graph.vertices()) {
    auto it = e.find(vert.id);
    if (it == e.end() || it->second.is_zero()) continue;
    coeffs[vert.id] = it->second.str();
    red[vert.id] = rational_to_json(r.at(vert.id));
  }
  j["coefficients"] = std::move(coeffs);
  j["reduction"] = std::move(red);
  std::cout << dump(j);
  return kOk;
}

struct PoincareArgs {
  std::string graph = "-";
  std::optional<long> degree;
  std::string format = "tsv";
  bool odd = false;
};

int run_poincare(const PoincareArgs& a) {
  const GkmGraph g = load_graph(a.graph);
  const long d = a.degree.value_or(std::max(0, g.max_cell_dim() / 2));
  const auto ranks = poincare_series(g, d);
  if (a.format == "json") {
    Json rows = Json::array();
    for (std::size_t k = 0; k < ranks.size(); ++k)
      if (a.odd || k % 2 == 0) rows.push_back({{"degree", k}, {"rank", ranks[k]}});
    std::cout << dump(rows);
  } else {
    std::cout << "degree\trank\n";
    for (std::size_t k = 0; k < ranks.size(); ++k)
      if (a.odd || k % 2 == 0) std::cout << k << "\t" << ranks[k] << "\n";
  }
  return kOk;
}

struct PowerArgs {
  std::string graph;
  std::string preset;
  unsigned n = 1;
  std::string mode;
  std::string format = "tsv";
  bool table = false;
};

int run_power(const PowerArgs& a) {
  GkmGraph g;
  if (!a.preset.empty()) {
    if (!a.graph.empty()) throw UsageError("give either a graph file or --preset, not both");
    g = build_preset(a.preset, std::max<std::size_t>(a.n, 1));
  } else {
    g = load_graph(a.graph.empty() ? "-" : a.graph);
  }
  SolverOptions opt;
  if (!a.mode.empty()) opt.mode = mode_arg(a.mode);
  const auto basis = canonical_generators(g, a.n, opt);
  const unsigned first = a.table ? 1 : a.n;
  std::vector<PowerResult> rows;
  for (unsigned k = first; k <= a.n; ++k) rows.push_back(power_coefficient_detail(basis, k));
  if (a.format == "json") {
    Json out = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const unsigned k = first + static_cast<unsigned>(i);
      out.push_back({{"n", k},
                     {"degree", 2 * k},
                     {"vertex", rows[i].target},
                     {"coefficient", rational_to_json(rows[i].coefficient)},
                     {"integral", rows[i].integral}});
    }
    std::cout << dump(out);
  } else {
    std::cout << "n\tdegree\tcoefficient\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
      std::cout << first + i << "\t" << 2 * (first + i) << "\t" << to_string(rows[i].coefficient) << "\n";
  }
  return kOk;
}

struct RenderArgs {
  std::string graph;
  std::string basis;
  std::string vertex;
  std::string format = "dot";
  std::string title;
  std::string out = "-";
};

int run_render(const RenderArgs& a) {
  RenderOptions opt;
  opt.format = a.format == "svg" ? RenderOptions::Format::Svg : RenderOptions::Format::Dot;
  opt.title = a.title;
  GkmGraph g;
  if (!a.basis.empty()) {
    const GeneratorBasis b = load_basis(a.basis);
    g = a.graph.empty() ? b.graph : load_graph(a.graph);
    if (a.vertex.empty()) throw UsageError("--basis needs --vertex");
    opt.decoration = b.at(a.vertex);
  } else {
    if (!a.vertex.empty()) throw UsageError("--vertex needs --basis");
    g = load_graph(a.graph.empty() ? "-" : a.graph);
  }
  const Rendered r = render(g, opt);
  for (const auto& w : r.warnings) std::cerr << "warning: NotFactorable: " << w << "\n";
  write_text(a.out, r.text);
  return kOk;
}

// ---------------------------------------------------------------------------
// oracle

int run_oracle_s2(long max_degree) {
  const GkmGraph g = build_preset("s2");
  bool ok = true;
  std::cout << "degree\tbrute_force\tpredicted\n";
  for (long d = 0; d <= max_degree; ++d) {
    const auto got = oracle::brute_force_classes(g, static_cast<unsigned>(d)).size();
    const auto want = oracle::predicted_dimension(g, static_cast<unsigned>(d));
    ok = ok && got == want;
    std::cout << d << "\t" << got << "\t" << want << "\n";
  }
  return ok ? kOk : kFailed;
}

int run_oracle_s2n(const std::string& weights, const std::string& poly) {
  const auto ws = parse_weight_list(weights);
  std::size_t k = 0;
  for (const auto& w : ws) k = std::max(k, w.rank());
  const auto r = oracle::s2n_relative_image(ws, parse_polynomial(poly, k));
  std::cout << "each_divides\t" << (r.each_divides ? "yes" : "no") << "\n";
  std::cout << "product_divides\t" << (r.product_divides ? "yes" : "no") << "\n";
  return r.agree() ? kOk : kFailed;
}

int run_oracle_rank_check(const std::string& path, long max_degree) {
  const GkmGraph g = load_graph(path);
  bool ok = true;
  std::cout << "degree\tbrute_force\tpredicted\n";
  for (long d = 0; d <= max_degree; ++d) {
    const auto got = oracle::brute_force_classes(g, static_cast<unsigned>(d)).size();
    const auto want = oracle::predicted_dimension(g, static_cast<unsigned>(d));
    ok = ok && got == want;
    std::cout << d << "\t" << got << "\t" << want << "\n";
  }
  return ok ? kOk : kFailed;
}

int run_oracle_schubert(const std::string& basis_path, const std::string& type, const std::string& gcm) {
  const GeneratorBasis b = load_basis(basis_path);
  std::vector<std::vector<long long>> cartan;
  if (!gcm.empty()) {
    cartan = load_gcm(gcm).cartan.entries();
  } else if (!type.empty()) {
    try {
      cartan = coxeter::finite_cartan_by_name(type).entries();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else if (b.graph.origin()) {
    if (!b.graph.origin()->parabolic.empty()) throw oracle::NotFiniteType("schubert-compare needs a full flag graph (J empty)");
    cartan = b.graph.origin()->cartan;
  } else {
    throw UsageError("graph records no Cartan matrix; pass --type or --gcm");
  }
  bool ok = true;
  for (const auto& v : b.graph.vertices()) {
    if (!b.contains(v.id)) continue;
    const CohClass s = oracle::divided_difference_schubert(cartan, b.graph, v.id);
    const CohClass& f = b.at(v.id);
    bool same = true;
    for (const auto& w : b.graph.vertices()) same = same && f.at(w.id) == s.at(w.id);
    ok = ok && same;
    std::cout << v.id << "\t" << (same ? "match" : "MISMATCH") << "\n";
  }
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kOk : kFailed;
}

int exit_code_for(const SolverError& e) {
  switch (e.kind) {
    case SolverErrorKind::ValidationFailure: return kFailed;
    case SolverErrorKind::NonIntegral: return kNonIntegral;
    default: return kNoSolution;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GKM graph cohomology toolkit"};
  app.require_subcommand(1);
  std::function<int()> action;

  BuildArgs build;
  auto* cb = app.add_subcommand("build", "build a graph from a preset or a Cartan matrix");
  cb->add_option("preset", build.preset, "preset name (see --list) or 'chain'");
  cb->add_option("--gcm", build.gcm, "JSON file with a Cartan matrix");
  cb->add_option("--parabolic", build.parabolic, "comma-separated parabolic node indices")
      ->each([&](const std::string&) { build.parabolic_given = true; });
  cb->add_option("--degree,-d", build.degree, "length cutoff D (cells of dimension <= 2D)");
  cb->add_option("--mode", build.mode, "coefficient mode Z or Q");
  cb->add_option("--points", build.points, "chain preset points, e.g. \"0,0;1,0;3,1\"");
  cb->add_option("-o,--output", build.out, "output file (default stdout)");
  cb->add_flag("--list", build.list, "list the presets");
  cb->callback([&] { action = [&] { return run_build(build); }; });

  std::string validate_path = "-";
  auto* cv = app.add_subcommand("validate", "check the graph assumptions");
  cv->add_option("graph", validate_path, "graph JSON (default stdin)");
  cv->callback([&] { action = [&] { return run_validate(validate_path); }; });

  GeneratorsArgs gens;
  auto* cg = app.add_subcommand("generators", "solve for the canonical generators f_v");
  cg->add_option("graph", gens.graph, "graph JSON (default stdin)");
  cg->add_option("--degree,-d", gens.degree, "degree cutoff (default: everything)");
  cg->add_option("--mode", gens.mode, "override the coefficient mode, Z or Q");
  cg->add_option("-o,--output", gens.out, "basis JSON output (default stdout)");
  cg->add_flag("--verify", gens.verify, "check the characterizing conditions, report on stderr");
  cg->callback([&] { action = [&] { return run_generators(gens); }; });

  std::string check_graph, check_class;
  auto* cc = app.add_subcommand("check", "test whether a class satisfies the edge congruences");
  cc->add_option("graph", check_graph, "graph JSON")->required();
  cc->add_option("class", check_class, "class JSON")->required();
  cc->callback([&] { action = [&] { return run_check(check_graph, check_class); }; });

  MultiplyArgs mult;
  auto* cm = app.add_subcommand("multiply", "expand f_v * f_w in the generator basis");
  cm->add_option("basis", mult.basis, "basis JSON")->required();
  cm->add_option("v", mult.v, "first vertex")->required();
  cm->add_option("w", mult.w, "second vertex")->required();
  cm->callback([&] { action = [&] { return run_multiply(mult); }; });

  PoincareArgs poin;
  auto* cp = app.add_subcommand("poincare", "ranks of the cohomology by degree");
  cp->add_option("graph", poin.graph, "graph JSON (default stdin)");
  cp->add_option("--degree,-d", poin.degree, "degree cutoff D (rows 0..2D)");
  cp->add_option("--format", poin.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  cp->add_flag("--odd", poin.odd, "include the odd degrees");
  cp->callback([&] { action = [&] { return run_poincare(poin); }; });

  PowerArgs pow;
  auto* cw = app.add_subcommand("power", "coefficient of f_{v_n} in x^n after ordinary reduction");
  cw->add_option("graph", pow.graph, "graph JSON (default stdin unless --preset)");
  cw->add_option("--preset", pow.preset, "build this preset with cutoff n");
  cw->add_option("--n,-n", pow.n, "power n")->required()->check(CLI::PositiveNumber);
  cw->add_option("--mode", pow.mode, "override the coefficient mode, Z or Q");
  cw->add_option("--format", pow.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  cw->add_flag("--table", pow.table, "print every k = 1..n");
  cw->callback([&] { action = [&] { return run_power(pow); }; });

  RenderArgs rend;
  auto* cr = app.add_subcommand("render", "draw a graph, optionally with the bouquets of f_v");
  cr->add_option("graph", rend.graph, "graph JSON (default: from --basis, else stdin)");
  cr->add_option("--basis", rend.basis, "basis JSON");
  cr->add_option("--vertex", rend.vertex, "draw the restrictions of f_vertex");
  cr->add_option("--format", rend.format, "dot or svg")->check(CLI::IsMember({"dot", "svg"}));
  cr->add_option("--title", rend.title, "caption");
  cr->add_option("-o,--output", rend.out, "output file (default stdout)");
  cr->callback([&] { action = [&] { return run_render(rend); }; });

  auto* co = app.add_subcommand("oracle", "independent cross-checks");
  co->require_subcommand(1);
  long s2_degree = 3;
  auto* os2 = co->add_subcommand("s2", "brute-force classes on the 2-sphere vs the rank formula");
  os2->add_option("--degree,-d", s2_degree, "maximum degree");
  os2->callback([&] { action = [&] { return run_oracle_s2(s2_degree); }; });

  std::string s2n_weights, s2n_poly;
  auto* os2n = co->add_subcommand("s2n", "relative image test for pairwise coprime weights");
  os2n->add_option("--weights", s2n_weights, "weights, e.g. \"1,0;0,1\"")->required();
  os2n->add_option("--poly", s2n_poly, "test polynomial, e.g. \"x1*x2\"")->required();
  os2n->callback([&] { action = [&] { return run_oracle_s2n(s2n_weights, s2n_poly); }; });

  std::string sc_basis = "-", sc_type, sc_gcm;
  auto* osc = co->add_subcommand("schubert-compare", "compare generators with divided-difference Schubert classes");
  osc->add_option("basis", sc_basis, "basis JSON of a full flag graph (default stdin)");
  osc->add_option("--type", sc_type, "finite type name, e.g. A2");
  osc->add_option("--gcm", sc_gcm, "JSON file with the Cartan matrix");
  osc->callback([&] { action = [&] { return run_oracle_schubert(sc_basis, sc_type, sc_gcm); }; });

  std::string rc_graph = "-";
  long rc_degree = 3;
  auto* orc = co->add_subcommand("rank-check", "brute-force dimension vs the free-module count");
  orc->add_option("graph", rc_graph, "graph JSON (default stdin)");
  orc->add_option("--degree,-d", rc_degree, "maximum degree");
  orc->callback([&] { action = [&] { return run_oracle_rank_check(rc_graph, rc_degree); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kIoError;
  }

  try {
    return action ? action() : kIoError;
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& l : e.report) std::cerr << "  " << l << "\n";
    return exit_code_for(e);
  } catch (const CutoffTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNoSolution;
  } catch (const oracle::CoprimalityViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  }
}
