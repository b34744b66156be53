// Canonical free-module generators f_v of graph cohomology, solved inductively
// up the skeleton filtration, plus expansion of classes in that basis.
//
// For a vertex v with cell_dim 2d, f_v is homogeneous of degree d, vanishes on
// every other vertex of cell_dim <= 2d, takes the product of the down-edge
// labels at v, and is extended to each higher vertex w by the unique degree-d
// solution of the congruences along the down-edges of w (unique because w has
// cell_dim(w)/2 > d down-edges with pairwise coprime labels).
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkm/graph.hpp"

namespace gkm {

enum class SolverErrorKind { ValidationFailure, NoSolution, NonUnique, NonIntegral, NotInSpan };

inline std::string to_string(SolverErrorKind k) {
  switch (k) {
    case SolverErrorKind::ValidationFailure: return "ValidationFailure";
    case SolverErrorKind::NoSolution: return "NoSolution";
    case SolverErrorKind::NonUnique: return "NonUnique";
    case SolverErrorKind::NonIntegral: return "NonIntegral";
    case SolverErrorKind::NotInSpan: return "NotInSpan";
  }
  return "?";
}

struct SolverError : std::runtime_error {
  SolverError(SolverErrorKind k, std::string generator_, std::string vertex_, const std::string& msg,
              Integer denominator_ = 1)
      : std::runtime_error(to_string(k) + ": " + msg),
        kind(k),
        generator(std::move(generator_)),
        vertex(std::move(vertex_)),
        denominator(std::move(denominator_)) {}

  SolverErrorKind kind;
  std::string generator;  // f_v being solved, if any
  std::string vertex;     // witness vertex
  Integer denominator;    // NonIntegral: lcm of coefficient denominators
  std::vector<std::string> report;  // ValidationFailure: validator lines
};

struct GeneratorBasis {
  GkmGraph graph;
  long cutoff = 0;
  CoefficientMode mode = CoefficientMode::Z;
  /// vertex id -> f_v, for every vertex with cell_dim / 2 <= cutoff
  std::map<std::string, CohClass> generators;

  bool contains(const std::string& v) const { return generators.count(v) != 0; }
  const CohClass& at(const std::string& v) const {
    auto it = generators.find(v);
    if (it == generators.end()) throw std::out_of_range("no generator for vertex '" + v + "'");
    return it->second;
  }
};

struct SolverOptions {
  /// Processing order of vertex indices; must be nondecreasing in cell_dim.
  /// Empty means canonical order.
  std::vector<std::size_t> order;
  /// Overrides the graph's coefficient mode.
  std::optional<CoefficientMode> mode;
};

namespace detail {

inline std::vector<std::size_t> processing_order(const GkmGraph& g, const SolverOptions& opt) {
  std::vector<std::size_t> order = opt.order;
  if (order.empty()) {
    order.resize(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    return order;
  }
  if (order.size() != g.vertex_count()) throw std::invalid_argument("processing order must list every vertex once");
  std::vector<bool> seen(order.size(), false);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] >= order.size() || seen[order[k]]) throw std::invalid_argument("processing order is not a permutation");
    seen[order[k]] = true;
    if (k && g.vertex(order[k - 1]).cell_dim > g.vertex(order[k]).cell_dim)
      throw std::invalid_argument("processing order must be nondecreasing in cell_dim");
  }
  return order;
}

}  // namespace detail

/// Solves for f_v at every vertex with cell_dim / 2 <= cutoff.
inline GeneratorBasis canonical_generators(const GkmGraph& g, long cutoff, const SolverOptions& opt = {}) {
  const auto report = validate(g);
  if (!report.passed()) {
    SolverError err(SolverErrorKind::ValidationFailure, "", "", "graph fails validation (" + report.issues.front().line() + ")");
    err.report = report.lines();
    throw err;
  }
  const CoefficientMode mode = opt.mode.value_or(g.mode());
  const auto order = detail::processing_order(g, opt);
  const std::size_t n = g.vertex_count();

  GeneratorBasis basis{g, cutoff, mode, {}};
  for (std::size_t v : order) {
    const auto& vv = g.vertex(v);
    const long d = vv.cell_dim / 2;
    if (d > cutoff) continue;

    std::vector<Polynomial> values(n, Polynomial(g.rank()));
    values[v] = g.down_weight_product(v);
    for (std::size_t w : order) {
      const auto& ww = g.vertex(w);
      if (ww.cell_dim <= vv.cell_dim) continue;
      std::vector<Congruence> cs;
      for (const auto& nb : g.down_edges(w)) cs.push_back({*nb.weight, values[nb.vertex]});
      const auto res = solve_congruences(cs, static_cast<unsigned>(d), g.rank(), mode);
      switch (res.status) {
        case CongruenceStatus::Unique:
          values[w] = res.solution;
          break;
        case CongruenceStatus::NoSolution:
          throw SolverError(SolverErrorKind::NoSolution, vv.id, ww.id,
                            "no degree-" + std::to_string(d) + " value for f_" + vv.id + " at " + ww.id +
                                " satisfies the edge congruences");
        case CongruenceStatus::NonUnique:
          throw SolverError(SolverErrorKind::NonUnique, vv.id, ww.id,
                            "f_" + vv.id + " at " + ww.id + " is not determined (solution space of dimension " +
                                std::to_string(res.solution_dim) + ")");
        case CongruenceStatus::NonIntegral:
          throw SolverError(SolverErrorKind::NonIntegral, vv.id, ww.id,
                            "f_" + vv.id + "(" + ww.id + ") = " + res.solution.str() + " has denominator " +
                                res.solution.denominator_lcm().str(),
                            res.solution.denominator_lcm());
      }
    }
    CohClass f;
    f.degree = d;
    for (std::size_t w = 0; w < n; ++w) f.values.emplace(g.vertex(w).id, std::move(values[w]));
    basis.generators.emplace(vv.id, std::move(f));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Verification

struct GeneratorCheck {
  std::string vertex;
  bool homogeneous = true;   // condition 1
  bool vanishes_below = true;  // condition 2
  bool vanishes_beside = true;  // condition 3
  bool normalized = true;    // condition 4
  bool gkm = true;

  bool ok() const { return homogeneous && vanishes_below && vanishes_beside && normalized && gkm; }
};

struct GeneratorReport {
  std::vector<GeneratorCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const GeneratorCheck& c) { return c.ok(); });
  }

  std::vector<std::string> lines() const {
    std::vector<std::string> out;
    auto yn = [](bool b) { return b ? "ok" : "FAIL"; };
    for (const auto& c : checks) {
      out.push_back("f_" + c.vertex + ": homogeneous=" + yn(c.homogeneous) + " below=" + yn(c.vanishes_below) +
                    " beside=" + yn(c.vanishes_beside) + " top=" + yn(c.normalized) + " gkm=" + yn(c.gkm));
    }
    out.push_back(passed() ? "PASS" : "FAIL");
    return out;
  }
};

inline GeneratorReport verify_generator_conditions(const GeneratorBasis& basis) {
  const GkmGraph& g = basis.graph;
  GeneratorReport rep;
  for (const auto& [vid, f] : basis.generators) {
    GeneratorCheck c;
    c.vertex = vid;
    const std::size_t v = g.index_of(vid);
    const int dim = g.vertex(v).cell_dim;
    for (std::size_t w = 0; w < g.vertex_count(); ++w) {
      const auto& ww = g.vertex(w);
      const Polynomial& val = f.at(ww.id);
      if (!val.is_homogeneous(dim / 2)) c.homogeneous = false;
      if (ww.cell_dim < dim && !val.is_zero()) c.vanishes_below = false;
      if (ww.cell_dim == dim && w != v && !val.is_zero()) c.vanishes_beside = false;
    }
    c.normalized = f.at(vid) == g.down_weight_product(v);
    c.gkm = is_gkm_class(g, f).ok;
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Expansion in the generator basis

using Expansion = std::map<std::string, Polynomial>;

/// Coefficients c_v in H_T(pt) with f = sum_v c_v f_v, found greedily in
/// increasing cell dimension by dividing the residual at v by each down-edge
/// label of v in turn.
inline Expansion expand_in_basis(const CohClass& f, const GeneratorBasis& basis) {
  const GkmGraph& g = basis.graph;
  std::vector<Polynomial> residual;
  residual.reserve(g.vertex_count());
  for (const auto& v : g.vertices()) residual.push_back(f.at(v.id).extended(g.rank()));

  Expansion out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& vid = g.vertex(v).id;
    if (residual[v].is_zero()) {
      if (basis.contains(vid)) out.emplace(vid, Polynomial(g.rank()));
      continue;
    }
    if (!basis.contains(vid))
      throw SolverError(SolverErrorKind::NotInSpan, "", vid,
                        "nonzero residual " + residual[v].str() + " at " + vid + ", beyond the basis cutoff");
    Polynomial c = residual[v];
    for (const auto& nb : g.down_edges(v)) {
      auto q = divide_by_weight(c, *nb.weight);
      if (!q)
        throw SolverError(SolverErrorKind::NotInSpan, "", vid,
                          "residual " + residual[v].str() + " at " + vid + " is not divisible by the down-edge product");
      c = std::move(*q);
    }
    if (basis.mode == CoefficientMode::Z && !c.is_integral())
      throw SolverError(SolverErrorKind::NonIntegral, "", vid,
                        "coefficient " + c.str() + " at " + vid + " is not integral", c.denominator_lcm());
    const CohClass& fv = basis.at(vid);
    for (std::size_t w = 0; w < g.vertex_count(); ++w) {
      const Polynomial& fw = fv.at(g.vertex(w).id);
      if (!fw.is_zero()) residual[w] -= c * fw;
    }
    out.emplace(vid, std::move(c));
  }
  for (std::size_t w = 0; w < g.vertex_count(); ++w) {
    if (!residual[w].is_zero())
      throw SolverError(SolverErrorKind::NotInSpan, "", g.vertex(w).id, "nonzero residual after expansion");
  }
  return out;
}

/// sum_v c_v f_v as a class.
inline CohClass combine(const Expansion& coeffs, const GeneratorBasis& basis) {
  const GkmGraph& g = basis.graph;
  CohClass r;
  for (const auto& v : g.vertices()) r.values.emplace(v.id, Polynomial(g.rank()));
  for (const auto& [vid, c] : coeffs) {
    if (c.is_zero()) continue;
    const CohClass& fv = basis.at(vid);
    for (auto& [wid, val] : r.values) val += c * fv.at(wid);
  }
  return r;
}

}  // namespace gkm
