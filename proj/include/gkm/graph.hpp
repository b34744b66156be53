// Decorated GKM graphs: vertices are the T-fixed points with the real
// dimension of their cell, edges are invariant 2-spheres labeled by the
// isotropy weight (defined up to sign).
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gkm/polyring.hpp"

namespace gkm {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MissingVertexValue : std::runtime_error {
  explicit MissingVertexValue(const std::string& id)
      : std::runtime_error("class has no value at vertex '" + id + "'"), vertex(id) {}
  std::string vertex;
};

struct Vertex {
  std::string id;
  int cell_dim = 0;
  std::optional<std::vector<Rational>> position;
  std::optional<std::string> label;
};

struct Edge {
  std::string from;
  std::string to;
  Weight weight;
};

/// Graph with canonical ordering: vertices by (cell_dim, id), edges by the
/// canonical indices of their endpoints, each edge oriented from its earlier
/// endpoint. Immutable once constructed.
struct FlagOrigin {
  std::vector<std::vector<long long>> cartan;
  std::vector<int> parabolic;

  friend bool operator==(const FlagOrigin&, const FlagOrigin&) = default;
};

class GkmGraph {
 public:
  GkmGraph() = default;

  GkmGraph(std::size_t rank, CoefficientMode mode, std::vector<Vertex> vertices, std::vector<Edge> edges)
      : rank_(rank), mode_(mode), vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end(), [](const Vertex& a, const Vertex& b) {
      return std::tie(a.cell_dim, a.id) < std::tie(b.cell_dim, b.id);
    });
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (!index_.emplace(vertices_[i].id, i).second)
        throw GraphError("duplicate vertex id '" + vertices_[i].id + "'");
    }
    struct Keyed {
      std::size_t a, b;
      Edge e;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(edges.size());
    for (auto& e : edges) {
      if (e.weight.rank() != rank_)
        throw GraphError("edge " + e.from + "--" + e.to + " weight has rank " + std::to_string(e.weight.rank()) +
                         ", graph rank is " + std::to_string(rank_));
      std::size_t a = index_of(e.from), b = index_of(e.to);
      if (a > b) {
        std::swap(a, b);
        std::swap(e.from, e.to);
      }
      keyed.push_back({a, b, std::move(e)});
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const Keyed& x, const Keyed& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    adjacency_.resize(vertices_.size());
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      edges_.push_back(std::move(keyed[i].e));
      endpoints_.emplace_back(keyed[i].a, keyed[i].b);
      adjacency_[keyed[i].a].push_back(i);
      if (keyed[i].b != keyed[i].a) adjacency_[keyed[i].b].push_back(i);
    }
  }

  std::size_t rank() const { return rank_; }
  CoefficientMode mode() const { return mode_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Linear map from torus coordinates to the drawing plane, one (x, y) per
  /// coordinate. Only consumed by rendering.
  const std::optional<std::vector<std::pair<double, double>>>& projection() const { return projection_; }
  void set_projection(std::vector<std::pair<double, double>> p) { projection_ = std::move(p); }

  /// Cartan matrix and parabolic node set the graph was built from, if any.
  const std::optional<FlagOrigin>& origin() const { return origin_; }
  void set_origin(FlagOrigin o) { origin_ = std::move(o); }

  /// Carries projection and origin over to a graph derived from `other`.
  void copy_metadata(const GkmGraph& other) {
    projection_ = other.projection_;
    origin_ = other.origin_;
  }

  bool contains(const std::string& id) const { return index_.count(id) != 0; }

  std::size_t index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw GraphError("unknown vertex id '" + id + "'");
    return it->second;
  }

  const Vertex& vertex(std::size_t i) const { return vertices_[i]; }
  const Vertex& vertex(const std::string& id) const { return vertices_[index_of(id)]; }

  /// Canonical vertex indices (a <= b) of edge i.
  std::pair<std::size_t, std::size_t> endpoints(std::size_t edge) const { return endpoints_[edge]; }

  /// Edge indices incident to vertex v.
  const std::vector<std::size_t>& incident(std::size_t v) const { return adjacency_[v]; }

  std::size_t other_end(std::size_t edge, std::size_t v) const {
    const auto [a, b] = endpoints_[edge];
    return a == v ? b : a;
  }

  struct Neighbor {
    std::size_t vertex;
    std::size_t edge;
    const Weight* weight;
  };

  /// Edges to vertices of strictly smaller cell dimension, in canonical order.
  std::vector<Neighbor> down_edges(std::size_t v) const {
    std::vector<Neighbor> out;
    for (std::size_t e : adjacency_[v]) {
      const std::size_t u = other_end(e, v);
      if (vertices_[u].cell_dim < vertices_[v].cell_dim) out.push_back({u, e, &edges_[e].weight});
    }
    return out;
  }

  /// Product of the down-edge labels of v, as stored.
  Polynomial down_weight_product(std::size_t v) const {
    Polynomial p = Polynomial::constant(rank_, 1);
    for (const auto& n : down_edges(v)) p *= Polynomial::from_weight(*n.weight);
    return p;
  }

  int max_cell_dim() const { return vertices_.empty() ? -1 : vertices_.back().cell_dim; }

 private:
  std::size_t rank_ = 0;
  CoefficientMode mode_ = CoefficientMode::Z;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::pair<std::size_t, std::size_t>> endpoints_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::unordered_map<std::string, std::size_t> index_;
  std::optional<std::vector<std::pair<double, double>>> projection_;
  std::optional<FlagOrigin> origin_;
};

/// An element of graph cohomology: vertex id -> polynomial.
struct CohClass {
  std::map<std::string, Polynomial> values;
  std::optional<long> degree;

  const Polynomial& at(const std::string& id) const {
    auto it = values.find(id);
    if (it == values.end()) throw MissingVertexValue(id);
    return it->second;
  }

  bool is_zero() const {
    return std::all_of(values.begin(), values.end(), [](const auto& kv) { return kv.second.is_zero(); });
  }

  static CohClass constant(const GkmGraph& g, const Rational& c) {
    CohClass f;
    for (const auto& v : g.vertices()) f.values.emplace(v.id, Polynomial::constant(g.rank(), c));
    f.degree = 0;
    return f;
  }

  friend bool operator==(const CohClass& a, const CohClass& b) { return a.values == b.values; }
};

// ---------------------------------------------------------------------------
// Validation

enum class IssueKind {
  OddCellDim,
  NegativeCellDim,
  SelfLoop,
  ZeroWeight,
  WrongDownEdgeCount,
  NotCoprime,
  ImprimitiveWeight,
  EqualDimensionEdge,
  BottomVertexCount,
  Disconnected,
};

inline std::string to_string(IssueKind k) {
  switch (k) {
    case IssueKind::OddCellDim: return "odd-cell";
    case IssueKind::NegativeCellDim: return "negative-cell";
    case IssueKind::SelfLoop: return "self-loop";
    case IssueKind::ZeroWeight: return "zero-weight";
    case IssueKind::WrongDownEdgeCount: return "down-edge-count";
    case IssueKind::NotCoprime: return "not-coprime";
    case IssueKind::ImprimitiveWeight: return "imprimitive-weight";
    case IssueKind::EqualDimensionEdge: return "equal-dimension-edge";
    case IssueKind::BottomVertexCount: return "bottom-vertex-count";
    case IssueKind::Disconnected: return "disconnected";
  }
  return "?";
}

struct ValidationIssue {
  IssueKind kind;
  std::string subject;  // vertex id, "a--b" for edges, or "graph"
  std::string message;

  std::string line() const { return "FAIL " + to_string(kind) + " " + subject + ": " + message; }
};

struct VertexReport {
  std::string id;
  int cell_dim = 0;
  std::size_t down_edges = 0;
  bool coprime = true;
  bool primitive = true;
};

struct ValidationReport {
  std::vector<VertexReport> vertices;
  std::vector<ValidationIssue> issues;
  bool connected = true;

  bool passed() const { return issues.empty(); }

  bool has(IssueKind k, const std::string& subject = {}) const {
    return std::any_of(issues.begin(), issues.end(), [&](const ValidationIssue& i) {
      return i.kind == k && (subject.empty() || i.subject == subject);
    });
  }

  std::vector<std::string> lines() const {
    std::vector<std::string> out;
    for (const auto& v : vertices) {
      out.push_back("vertex " + v.id + " dim=" + std::to_string(v.cell_dim) +
                    " down=" + std::to_string(v.down_edges) + " coprime=" + (v.coprime ? "yes" : "no") +
                    " primitive=" + (v.primitive ? "yes" : "no"));
    }
    out.push_back(std::string("connected=") + (connected ? "yes" : "no"));
    for (const auto& i : issues) out.push_back(i.line());
    out.push_back(passed() ? "PASS" : "FAIL");
    return out;
  }
};

inline ValidationReport validate(const GkmGraph& g) {
  ValidationReport rep;
  const auto& vs = g.vertices();

  std::size_t bottoms = 0;
  for (const auto& v : vs) {
    if (v.cell_dim < 0)
      rep.issues.push_back({IssueKind::NegativeCellDim, v.id, "cell_dim " + std::to_string(v.cell_dim) + " is negative"});
    else if (v.cell_dim % 2 != 0)
      rep.issues.push_back({IssueKind::OddCellDim, v.id, "cell_dim " + std::to_string(v.cell_dim) + " is odd"});
    if (v.cell_dim == 0) ++bottoms;
  }

  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    const auto [a, b] = g.endpoints(e);
    const std::string name = edge.from + "--" + edge.to;
    if (a == b) rep.issues.push_back({IssueKind::SelfLoop, name, "edge joins a vertex to itself"});
    if (edge.weight.is_zero()) rep.issues.push_back({IssueKind::ZeroWeight, name, "edge weight is zero"});
    if (a != b && vs[a].cell_dim == vs[b].cell_dim)
      rep.issues.push_back({IssueKind::EqualDimensionEdge, name,
                            "edge joins two vertices of cell_dim " + std::to_string(vs[a].cell_dim)});
  }

  for (std::size_t i = 0; i < vs.size(); ++i) {
    VertexReport vr;
    vr.id = vs[i].id;
    vr.cell_dim = vs[i].cell_dim;
    std::vector<Weight> ws;
    for (const auto& n : g.down_edges(i)) {
      if (!n.weight->is_zero()) ws.push_back(*n.weight);
      ++vr.down_edges;
    }
    if (vs[i].cell_dim >= 0 && vs[i].cell_dim % 2 == 0 &&
        vr.down_edges != static_cast<std::size_t>(vs[i].cell_dim / 2)) {
      rep.issues.push_back({IssueKind::WrongDownEdgeCount, vr.id,
                            std::to_string(vr.down_edges) + " down-edges, expected cell_dim/2 = " +
                                std::to_string(vs[i].cell_dim / 2)});
    }
    vr.coprime = pairwise_coprime(ws, CoefficientMode::Q);
    if (!vr.coprime)
      rep.issues.push_back({IssueKind::NotCoprime, vr.id, "down-edge weights are not pairwise coprime (collinear pair)"});
    vr.primitive = std::all_of(ws.begin(), ws.end(), [](const Weight& w) { return w.is_primitive(); });
    if (g.mode() == CoefficientMode::Z && !vr.primitive)
      rep.issues.push_back({IssueKind::ImprimitiveWeight, vr.id, "down-edge weight is not primitive (Z-mode)"});
    rep.vertices.push_back(std::move(vr));
  }

  if (bottoms != 1)
    rep.issues.push_back({IssueKind::BottomVertexCount, "graph",
                          std::to_string(bottoms) + " vertices of cell_dim 0, expected exactly 1"});

  // connectivity
  if (!vs.empty()) {
    std::vector<bool> seen(vs.size(), false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (std::size_t e : g.incident(v)) {
        const std::size_t u = g.other_end(e, v);
        if (!seen[u]) {
          seen[u] = true;
          ++count;
          q.push(u);
        }
      }
    }
    rep.connected = count == vs.size();
    if (!rep.connected)
      rep.issues.push_back({IssueKind::Disconnected, "graph",
                            std::to_string(vs.size() - count) + " vertices unreachable from " + vs[0].id});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Graph cohomology membership

struct GkmCheck {
  bool ok = true;
  /// Witness quotients (f(p) - f(q)) / alpha_e, in edge order, up to the first failure.
  std::vector<Polynomial> witnesses;
  std::optional<std::size_t> failing_edge;

  explicit operator bool() const { return ok; }
};

inline GkmCheck is_gkm_class(const GkmGraph& g, const CohClass& f) {
  for (const auto& v : g.vertices()) (void)f.at(v.id);
  GkmCheck out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    auto q = divide_by_weight(f.at(edge.from) - f.at(edge.to), edge.weight);
    if (!q) {
      out.ok = false;
      out.failing_edge = e;
      return out;
    }
    out.witnesses.push_back(std::move(*q));
  }
  return out;
}

/// Induced subgraph on vertices with cell_dim <= 2k.
inline GkmGraph skeleton(const GkmGraph& g, long k) {
  std::vector<Vertex> vs;
  for (const auto& v : g.vertices())
    if (v.cell_dim <= 2 * k) vs.push_back(v);
  std::vector<Edge> es;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(e);
    if (g.vertex(a).cell_dim <= 2 * k && g.vertex(b).cell_dim <= 2 * k) es.push_back(g.edges()[e]);
  }
  GkmGraph out(g.rank(), g.mode(), std::move(vs), std::move(es));
  out.copy_metadata(g);
  return out;
}

/// Restriction of a class to the vertices of a subgraph.
inline CohClass restrict(const CohClass& f, const GkmGraph& sub) {
  CohClass r;
  r.degree = f.degree;
  for (const auto& v : sub.vertices()) r.values.emplace(v.id, f.at(v.id));
  return r;
}

/// True iff f vanishes on every vertex of the k-skeleton.
inline bool is_relative_class(const GkmGraph& g, const CohClass& f, long k) {
  for (const auto& v : g.vertices())
    if (v.cell_dim <= 2 * k && !f.at(v.id).is_zero()) return false;
  return true;
}

/// Pointwise sum/product (ring structure of graph cohomology).
inline CohClass pointwise(const CohClass& a, const CohClass& b, bool product) {
  CohClass r;
  for (const auto& [id, p] : a.values) r.values.emplace(id, product ? p * b.at(id) : p + b.at(id));
  if (a.degree && b.degree) {
    if (product)
      r.degree = *a.degree + *b.degree;
    else if (*a.degree == *b.degree)
      r.degree = a.degree;
  }
  return r;
}

}  // namespace gkm
