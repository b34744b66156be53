// GKM graphs of Kac-Moody homogeneous spaces G/P, truncated at a length
// cutoff, and their moment-map embeddings.
//
// Vertices are the minimal coset representatives w with cell_dim 2 l(w); ids
// are the canonical reduced words ("e", "0", "1.0", ...). Edge [w]--[r_b w]
// is labeled by the positive real root b in the simple-root basis, which is
// the character lattice of T = T_G / Z(G).
#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gkm/coxeter.hpp"
#include "gkm/graph.hpp"
#include "gkm/linalg.hpp"

namespace gkm {

struct ClosureFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadBasePoint : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedType : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Everything needed to rebuild or re-embed a flag graph.
struct FlagData {
  coxeter::CartanMatrix cartan;
  std::set<int> parabolic;
  std::size_t degree = 0;
};

inline Weight weight_of(const coxeter::Vec& v) {
  std::vector<Integer> cs;
  cs.reserve(v.size());
  for (auto c : v) cs.emplace_back(c);
  return Weight(std::move(cs));
}

namespace detail {

struct FlagEdges {
  // (top index, bottom index) -> label
  std::map<std::pair<std::size_t, std::size_t>, coxeter::Vec> down;
  bool closed = true;
};

inline FlagEdges flag_edges(const coxeter::CosetEnumeration& cosets, long long max_height) {
  const auto& a = cosets.cartan();
  const auto roots = coxeter::real_roots(a, max_height);
  std::vector<coxeter::Word> reflections;
  reflections.reserve(roots.size());
  for (const auto& r : roots) reflections.push_back(coxeter::reflection_word(r));

  FlagEdges out;
  const auto& reps = cosets.reps();
  for (std::size_t w = 0; w < reps.size(); ++w) {
    std::size_t found = 0;
    for (std::size_t k = 0; k < roots.size(); ++k) {
      coxeter::Word rw = reflections[k];
      rw.insert(rw.end(), reps[w].word.begin(), reps[w].word.end());
      const auto u = cosets.find(cosets.key_of(rw));
      if (!u || reps[*u].length() >= reps[w].length()) continue;
      auto [it, inserted] = out.down.try_emplace({w, *u}, roots[k].coords);
      if (inserted) {
        ++found;
        continue;
      }
      // a second root giving the same reflection must be a multiple of the first
      const Weight old = weight_of(it->second), cur = weight_of(roots[k].coords);
      if (!collinear(old, cur))
        throw GraphError("two reflections join cosets " + coxeter::word_to_string(reps[w].word) + " and " +
                         coxeter::word_to_string(reps[*u].word));
      if (cur.content() < old.content()) it->second = roots[k].coords;
    }
    if (found != reps[w].length()) out.closed = false;
  }
  return out;
}

}  // namespace detail

/// GKM graph of G/P for the given Cartan matrix and parabolic node set,
/// truncated to cosets of length <= max_length. The root-height search is
/// doubled until every vertex has l(w) down-edges.
inline GkmGraph build_flag_graph(const coxeter::CartanMatrix& a, const std::set<int>& parabolic,
                                 std::size_t max_length, CoefficientMode mode = CoefficientMode::Z) {
  const coxeter::CosetEnumeration cosets(a, parabolic, max_length);
  long long height = 2 * static_cast<long long>(max_length) + 2;
  detail::FlagEdges edges;
  for (int attempt = 0;; ++attempt) {
    edges = detail::flag_edges(cosets, height);
    if (edges.closed) break;
    if (attempt >= 12)
      throw ClosureFailure("down-edge closure not reached with root height " + std::to_string(height));
    height *= 2;
  }

  const auto& reps = cosets.reps();
  std::vector<Vertex> vs;
  for (const auto& r : reps) {
    Vertex v;
    v.id = coxeter::word_to_string(r.word);
    v.cell_dim = 2 * static_cast<int>(r.length());
    std::string label;
    for (int i : r.word) label += (label.empty() ? "s" : " s") + std::to_string(i);
    v.label = label.empty() ? "e" : label;
    vs.push_back(std::move(v));
  }
  std::vector<Edge> es;
  for (const auto& [key, root] : edges.down)
    es.push_back({vs[key.second].id, vs[key.first].id, weight_of(root)});
  GkmGraph g(a.size(), mode, std::move(vs), std::move(es));
  g.set_origin({a.entries(), std::vector<int>(parabolic.begin(), parabolic.end())});
  return g;
}

// ---------------------------------------------------------------------------
// Moment embedding

namespace detail {

/// Root-basis coordinates of the weight with the given coroot pairings, when
/// the Cartan matrix is invertible; the zero vector otherwise (affine types,
/// where only the offset within the fixed level slice is meaningful).
inline std::vector<Rational> weight_in_root_basis(const coxeter::CartanMatrix& a, const std::vector<Rational>& lambda) {
  const std::size_t n = a.size();
  linalg::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
  if (linalg::rank(m) < n) return std::vector<Rational>(n, Rational(0));
  auto sol = linalg::solve(m, lambda);
  return sol->particular;
}

}  // namespace detail

/// Places vertex [w] at w(lambda), lambda given by its coroot pairings.
///
/// lambda must vanish exactly on the parabolic nodes and be positive on the
/// others, so that its stabilizer is W_J. For affine matrices the level
/// component is dropped: positions live in the root-basis span (classical
/// coordinates plus the delta/energy direction).
inline GkmGraph moment_embedding(const GkmGraph& g, const coxeter::CartanMatrix& a, const std::set<int>& parabolic,
                                 const std::vector<Rational>& lambda) {
  coxeter::check_parabolic(a, parabolic);
  if (lambda.size() != a.size()) throw BadBasePoint("base point has the wrong number of coordinates");
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool in_j = parabolic.count(static_cast<int>(i)) != 0;
    if (in_j && lambda[i] != 0)
      throw BadBasePoint("s" + std::to_string(i) + " is in the parabolic but does not fix the base point");
    if (!in_j && lambda[i] <= 0)
      throw BadBasePoint("base point must be strictly positive off the parabolic (node " + std::to_string(i) + ")");
  }
  const auto origin = detail::weight_in_root_basis(a, lambda);

  std::vector<Vertex> vs = g.vertices();
  for (auto& v : vs) {
    const auto word = coxeter::word_from_string(v.id);
    // w(lambda) = lambda - sum d_j alpha_j, tracked over Q
    std::vector<Rational> d(a.size(), Rational(0));
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      const int i = *it;
      Rational pair = lambda[i];
      for (std::size_t j = 0; j < a.size(); ++j) pair -= Rational(a(i, j)) * d[j];
      d[i] += pair;
    }
    std::vector<Rational> pos(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) pos[j] = origin[j] - d[j];
    v.position = std::move(pos);
  }
  std::vector<Edge> es = g.edges();
  GkmGraph out(g.rank(), g.mode(), std::move(vs), std::move(es));
  out.copy_metadata(g);
  return out;
}

/// 2D drawing directions for the simple roots: Euclidean for finite types,
/// (classical, energy) for affine types whose node 0 is the affine node,
/// evenly spread unit vectors otherwise.
inline std::vector<std::pair<double, double>> default_projection(const coxeter::CartanMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::pair<double, double>> spread;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = std::numbers::pi * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(n, 1));
    spread.emplace_back(std::cos(t), std::sin(t));
  }
  const auto eps = coxeter::symmetrizer(a);
  if (!eps) return spread;

  // Cholesky of the Gram matrix on `nodes`; nullopt when not positive definite
  auto euclid = [&](const std::vector<std::size_t>& nodes) -> std::optional<std::vector<std::vector<double>>> {
    const std::size_t m = nodes.size();
    std::vector<std::vector<double>> gram(m, std::vector<double>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        gram[i][j] = static_cast<double>((*eps)[nodes[i]] * Rational(a(nodes[i], nodes[j])));
    std::vector<std::vector<double>> l(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        double s = gram[i][j];
        for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
        if (i == j) {
          if (s <= 1e-12) return std::nullopt;
          l[i][i] = std::sqrt(s);
        } else {
          l[i][j] = s / l[j][j];
        }
      }
    }
    return l;
  };
  auto plane = [](const std::vector<double>& row) {
    return std::make_pair(row.size() > 0 ? row[0] : 0.0, row.size() > 1 ? row[1] : 0.0);
  };

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  if (auto l = euclid(all)) {
    std::vector<std::pair<double, double>> out;
    for (const auto& row : *l) out.push_back(plane(row));
    return out;
  }
  if (n < 2) return spread;
  std::vector<std::size_t> classical(all.begin() + 1, all.end());
  const auto l = euclid(classical);
  if (!l) return spread;
  // null vector delta of the matrix, normalized so delta_0 = 1
  linalg::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
  const auto null = linalg::nullspace(m);
  if (null.size() != 1 || null[0][0] == 0) return spread;
  std::vector<Rational> delta = null[0];
  const Rational d0 = delta[0];
  for (auto& x : delta) x /= d0;

  std::vector<std::pair<double, double>> out(n);
  const bool energy_axis = classical.size() == 1;
  double ex = 0, ey = 0;
  for (std::size_t k = 0; k < classical.size(); ++k) {
    auto p = plane((*l)[k]);
    if (energy_axis) p = {p.first, 0.0};
    out[classical[k]] = p;
    ex -= static_cast<double>(delta[classical[k]]) * p.first;
    ey -= static_cast<double>(delta[classical[k]]) * p.second;
  }
  // alpha_0 = delta - sum_{k>0} delta_k alpha_k. With a one-dimensional
  // classical part delta is drawn along -y, so energy (-delta component of
  // w(lambda) - lambda) points up.
  out[0] = {ex, ey - (energy_axis ? 1.0 : 0.0)};
  return out;
}

// ---------------------------------------------------------------------------
// Named constructions

/// Omega K = LK / K as G/P for the untwisted affine group, J = finite nodes.
inline FlagData omega_k_data(const std::string& type, std::size_t max_length) {
  coxeter::CartanMatrix finite;
  try {
    finite = coxeter::finite_cartan_by_name(type);
  } catch (const std::invalid_argument& e) {
    throw UnsupportedType(e.what());
  }
  FlagData d{coxeter::untwisted_affine(finite), {}, max_length};
  for (std::size_t i = 1; i < d.cartan.size(); ++i) d.parabolic.insert(static_cast<int>(i));
  return d;
}

/// The twisted affine matrix [[2,-1],[-4,2]] with J = {1}; node 1 is the
/// short simple root ((alpha_0, alpha_0) = 4 (alpha_1, alpha_1)).
inline FlagData twisted_a14_data(std::size_t max_length) {
  return {coxeter::CartanMatrix({{2, -1}, {-4, 2}}), {1}, max_length};
}

/// Flag graph with the canonical moment embedding (lambda = 1 off J) and the
/// default drawing projection.
inline GkmGraph build_embedded(const FlagData& d, CoefficientMode mode = CoefficientMode::Z) {
  GkmGraph g = build_flag_graph(d.cartan, d.parabolic, d.degree, mode);
  std::vector<Rational> lambda(d.cartan.size(), Rational(1));
  for (int j : d.parabolic) lambda[j] = 0;
  g = moment_embedding(g, d.cartan, d.parabolic, lambda);
  g.set_projection(default_projection(d.cartan));
  return g;
}

inline GkmGraph build_omega_k(const std::string& type, std::size_t max_length) {
  return build_embedded(omega_k_data(type, max_length));
}

inline GkmGraph build_twisted_example(std::size_t max_length) { return build_embedded(twisted_a14_data(max_length)); }

/// Complete graph on points c_0..c_N with cell_dim 2i at c_i and edge labels
/// c_j - c_i (i < j), positioned at the points themselves. Models CP^N-type
/// T-spaces whose moment image is the given point set.
inline GkmGraph build_chain_graph(const std::vector<Weight>& points, CoefficientMode mode = CoefficientMode::Q) {
  if (points.empty()) throw std::invalid_argument("chain graph needs at least one point");
  const std::size_t rank = points.front().rank();
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].rank() != rank) throw std::invalid_argument("chain points must share one rank");
    std::vector<Rational> pos;
    for (const auto& c : points[i].coeffs()) pos.emplace_back(c);
    vs.push_back({"c" + std::to_string(i), 2 * static_cast<int>(i), std::move(pos), std::nullopt});
  }
  std::vector<Edge> es;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) es.push_back({vs[i].id, vs[j].id, points[j] - points[i]});
  return GkmGraph(rank, mode, std::move(vs), std::move(es));
}

/// Presets addressable by name from the CLI; a missing degree picks the
/// preset's default cutoff.
struct Preset {
  std::string name;
  std::string description;
  std::size_t default_degree;
};

inline const std::vector<Preset>& presets() {
  static const std::vector<Preset> p = {
      {"A2-flag", "SU(3)/T full flag variety (complete orbit)", 3},
      {"B2-flag", "Sp(2)/T full flag variety (complete orbit)", 4},
      {"omega-su2", "based loops Omega SU(2)", 4},
      {"omega-su3", "based loops Omega SU(3)", 3},
      {"A1-4-twisted", "G/P for the Cartan matrix [[2,-1],[-4,2]], P from the short root", 4},
      {"s2", "the 2-sphere with rotation weight x1 (rank 2 torus)", 1},
      {"point", "a single fixed point", 0},
  };
  return p;
}

inline std::optional<FlagData> preset_flag_data(const std::string& name, std::optional<std::size_t> degree) {
  auto deg = [&](std::size_t dflt) { return degree.value_or(dflt); };
  if (name == "A2-flag") return FlagData{coxeter::finite_cartan('A', 2), {}, deg(3)};
  if (name == "B2-flag") return FlagData{coxeter::finite_cartan('B', 2), {}, deg(4)};
  if (name == "omega-su2") return omega_k_data("SU(2)", deg(4));
  if (name == "omega-su3") return omega_k_data("SU(3)", deg(3));
  if (name == "A1-4-twisted") return twisted_a14_data(deg(4));
  return std::nullopt;
}

inline GkmGraph build_preset(const std::string& name, std::optional<std::size_t> degree = std::nullopt) {
  if (auto d = preset_flag_data(name, degree)) return build_embedded(*d);
  if (name == "s2") {
    return GkmGraph(2, CoefficientMode::Z,
                    {{"N", 2, std::vector<Rational>{1, 0}, "north"}, {"S", 0, std::vector<Rational>{0, 0}, "south"}},
                    {{"S", "N", Weight{1, 0}}});
  }
  if (name == "point") return GkmGraph(1, CoefficientMode::Z, {{"p", 0, std::nullopt, std::nullopt}}, {});
  throw UnsupportedType("unknown preset '" + name + "'");
}

}  // namespace gkm
