// Independent verifiers for tests and the `oracle` CLI subcommand. Nothing
// here calls into the generator solver or the Coxeter enumeration; only the
// polynomial layer and the graph data model are shared.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkm/graph.hpp"
#include "gkm/linalg.hpp"
#include "gkm/polyring.hpp"

namespace gkm::oracle {

struct CoprimalityViolated : std::invalid_argument {
  CoprimalityViolated() : std::invalid_argument("weights are not pairwise coprime") {}
};

struct NotFiniteType : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Basis of the Q-vector space of degree-d graph cohomology classes, by
/// solving the defining congruences directly: unknowns are the coefficients
/// of every f(v) and of every edge witness g_e with f(p) - f(q) = alpha_e g_e.
inline std::vector<CohClass> brute_force_classes(const GkmGraph& g, unsigned d) {
  const std::size_t k = g.rank();
  const auto top = monomials_of_degree(k, d);
  const auto low = d > 0 ? monomials_of_degree(k, d - 1) : std::vector<Exponent>{};
  std::map<Exponent, std::size_t> row_of;
  for (std::size_t i = 0; i < top.size(); ++i) row_of.emplace(top[i], i);

  const std::size_t nv = g.vertex_count(), ne = g.edge_count();
  const std::size_t fcols = nv * top.size();
  linalg::Matrix a(ne * top.size(), fcols + ne * low.size());
  for (std::size_t e = 0; e < ne; ++e) {
    const auto [p, q] = g.endpoints(e);
    const Weight& alpha = g.edges()[e].weight;
    const std::size_t r0 = e * top.size();
    for (std::size_t m = 0; m < top.size(); ++m) {
      a(r0 + m, p * top.size() + m) += 1;
      a(r0 + m, q * top.size() + m) -= 1;
    }
    for (std::size_t m = 0; m < low.size(); ++m) {
      for (std::size_t v = 0; v < k; ++v) {
        if (alpha[v] == 0) continue;
        Exponent ex = low[m];
        ++ex[v];
        a(r0 + row_of.at(ex), fcols + e * low.size() + m) -= Rational(alpha[v]);
      }
    }
  }
  const auto null = linalg::nullspace(a);

  // project onto the f coordinates and extract a basis of the image
  linalg::Matrix proj(null.size(), fcols);
  for (std::size_t r = 0; r < null.size(); ++r)
    for (std::size_t c = 0; c < fcols; ++c) proj(r, c) = null[r][c];
  const auto pivots = linalg::rref(proj);

  std::vector<CohClass> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    CohClass f;
    f.degree = d;
    for (std::size_t v = 0; v < nv; ++v) {
      Polynomial val(k);
      for (std::size_t m = 0; m < top.size(); ++m) val += Polynomial::monomial(top[m], proj(r, v * top.size() + m));
      f.values.emplace(g.vertex(v).id, std::move(val));
    }
    out.push_back(std::move(f));
  }
  return out;
}

/// sum over vertices of #monomials of degree d - cell_dim/2: the rank a free
/// module with one generator per cell predicts in degree d.
inline std::size_t predicted_dimension(const GkmGraph& g, unsigned d) {
  std::size_t s = 0;
  for (const auto& v : g.vertices()) s += monomial_count(g.rank(), static_cast<long>(d) - v.cell_dim / 2);
  return s;
}

struct RelativeImage {
  bool each_divides = false;     // alpha_i | g for every i
  bool product_divides = false;  // prod alpha_i | g

  bool agree() const { return each_divides == product_divides; }
  explicit operator bool() const { return each_divides; }
};

/// Membership of g in the image of the relative cohomology of S^2n, computed
/// both ways. The product criterion solves g = (prod alpha_i) q as a linear
/// system, so it does not reuse the single-weight division.
inline RelativeImage s2n_relative_image(const std::vector<Weight>& weights, const Polynomial& g) {
  if (!pairwise_coprime(weights, CoefficientMode::Q)) throw CoprimalityViolated();
  std::size_t k = g.nvars();
  for (const auto& w : weights) k = std::max(k, w.rank());
  const Polynomial gg = g.extended(k);

  RelativeImage r;
  r.each_divides = std::all_of(weights.begin(), weights.end(),
                               [&](const Weight& w) { return divide_by_weight(gg, w).has_value(); });

  Polynomial prod = Polynomial::constant(k, 1);
  for (const auto& w : weights) prod *= Polynomial::from_weight(w).extended(k);
  if (gg.is_zero()) {
    r.product_divides = true;
    return r;
  }
  if (!gg.is_homogeneous()) {
    // split into homogeneous components; prod is homogeneous
    r.product_divides = true;
    for (long d = 0; d <= gg.degree(); ++d) {
      RelativeImage part = s2n_relative_image(weights, gg.homogeneous_component(static_cast<unsigned>(d)));
      r.product_divides = r.product_divides && part.product_divides;
    }
    return r;
  }
  const long qd = gg.degree() - prod.degree();
  if (qd < 0) {
    r.product_divides = false;
    return r;
  }
  const auto qmons = monomials_of_degree(k, static_cast<unsigned>(qd));
  const auto gmons = monomials_of_degree(k, static_cast<unsigned>(gg.degree()));
  std::map<Exponent, std::size_t> row_of;
  for (std::size_t i = 0; i < gmons.size(); ++i) row_of.emplace(gmons[i], i);
  linalg::Matrix a(gmons.size(), qmons.size());
  std::vector<Rational> b(gmons.size());
  for (std::size_t i = 0; i < gmons.size(); ++i) b[i] = gg.coefficient(gmons[i]);
  for (std::size_t c = 0; c < qmons.size(); ++c) {
    const Polynomial col = prod * Polynomial::monomial(qmons[c], 1);
    for (const auto& [e, coeff] : col.terms()) a(row_of.at(e), c) = coeff;
  }
  r.product_divides = linalg::solve(a, b).has_value();
  return r;
}

// ---------------------------------------------------------------------------
// Equivariant Schubert classes of finite flag varieties

/// Weyl group of a finite-type Cartan matrix as integer matrices acting on
/// root coordinates, enumerated by breadth-first search (so BFS depth is the
/// Coxeter length).
class FiniteWeylGroup {
 public:
  using Mat = std::vector<std::vector<long long>>;

  explicit FiniteWeylGroup(const std::vector<std::vector<long long>>& cartan, std::size_t max_order = 100000)
      : n_(cartan.size()) {
    for (std::size_t i = 0; i < n_; ++i) {
      Mat s = identity();
      // s_i(alpha_j) = alpha_j - a_ij alpha_i ; column j is the image of alpha_j
      for (std::size_t j = 0; j < n_; ++j) s[i][j] -= cartan[i][j];
      gens_.push_back(std::move(s));
    }
    add(identity(), 0);
    std::queue<std::size_t> q;
    q.push(0);
    while (!q.empty()) {
      const auto x = q.front();
      q.pop();
      for (std::size_t i = 0; i < n_; ++i) {
        Mat y = mul(elements_[x], gens_[i]);
        if (index_.count(y)) continue;
        if (elements_.size() >= max_order) throw NotFiniteType("Weyl group exceeds " + std::to_string(max_order) + " elements");
        add(std::move(y), lengths_[x] + 1);
        q.push(elements_.size() - 1);
      }
    }
  }

  std::size_t size() const { return elements_.size(); }
  std::size_t rank() const { return n_; }
  const Mat& element(std::size_t k) const { return elements_[k]; }
  std::size_t length(std::size_t k) const { return lengths_[k]; }

  std::size_t index_of(const Mat& m) const { return index_.at(m); }

  std::size_t times_generator(std::size_t k, std::size_t i) const { return index_.at(mul(elements_[k], gens_[i])); }

  std::size_t from_word(const std::vector<int>& word) const {
    Mat m = identity();
    for (int i : word) m = mul(m, gens_.at(static_cast<std::size_t>(i)));
    return index_.at(m);
  }

  /// w(alpha_i) as a weight.
  Weight image_of_simple(std::size_t k, std::size_t i) const {
    std::vector<Integer> cs;
    for (std::size_t r = 0; r < n_; ++r) cs.emplace_back(elements_[k][r][i]);
    return Weight(std::move(cs));
  }

  std::vector<Weight> positive_roots() const {
    std::map<std::vector<long long>, bool> seen;
    std::vector<Weight> out;
    for (std::size_t k = 0; k < size(); ++k) {
      for (std::size_t i = 0; i < n_; ++i) {
        std::vector<long long> col(n_);
        bool pos = true;
        for (std::size_t r = 0; r < n_; ++r) {
          col[r] = elements_[k][r][i];
          if (col[r] < 0) pos = false;
        }
        if (pos && !seen.count(col)) {
          seen.emplace(col, true);
          out.push_back(image_of_simple(k, i));
        }
      }
    }
    return out;
  }

 private:
  Mat identity() const {
    Mat m(n_, std::vector<long long>(n_, 0));
    for (std::size_t i = 0; i < n_; ++i) m[i][i] = 1;
    return m;
  }
  Mat mul(const Mat& a, const Mat& b) const {
    Mat c(n_, std::vector<long long>(n_, 0));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k)
        if (a[i][k])
          for (std::size_t j = 0; j < n_; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  }
  void add(Mat m, std::size_t len) {
    index_.emplace(m, elements_.size());
    elements_.push_back(std::move(m));
    lengths_.push_back(len);
  }

  std::size_t n_;
  std::vector<Mat> gens_;
  std::vector<Mat> elements_;
  std::vector<std::size_t> lengths_;
  std::map<Mat, std::size_t> index_;
};

/// All equivariant Schubert classes xi^v restricted to fixed points, as
/// vectors indexed by group element. Starts from the top class (product of
/// positive roots at w0, zero elsewhere) and descends with the divided
/// difference (delta_i f)(w) = (f(w s_i) - f(w)) / w(alpha_i), which sends
/// xi^v to xi^{v s_i} whenever l(v s_i) < l(v).
inline std::vector<std::vector<Polynomial>> schubert_classes(const FiniteWeylGroup& W) {
  const std::size_t n = W.rank(), N = W.size();
  std::size_t w0 = 0;
  for (std::size_t k = 0; k < N; ++k)
    if (W.length(k) > W.length(w0)) w0 = k;

  std::vector<std::vector<Polynomial>> xi(N);
  std::vector<bool> done(N, false);
  xi[w0].assign(N, Polynomial(n));
  Polynomial top = Polynomial::constant(n, 1);
  for (const auto& r : W.positive_roots()) top *= Polynomial::from_weight(r);
  xi[w0][w0] = top;
  done[w0] = true;

  std::vector<std::size_t> by_length(N);
  for (std::size_t k = 0; k < N; ++k) by_length[k] = k;
  std::sort(by_length.begin(), by_length.end(), [&](std::size_t a, std::size_t b) { return W.length(a) > W.length(b); });
  for (std::size_t v : by_length) {
    if (done[v]) continue;
    // some s_i lengthens v; descend from v s_i
    std::size_t i = 0, up = 0;
    for (; i < n; ++i) {
      up = W.times_generator(v, i);
      if (W.length(up) > W.length(v)) break;
    }
    const auto& f = xi[up];
    std::vector<Polynomial> g(N, Polynomial(n));
    for (std::size_t w = 0; w < N; ++w) {
      const Polynomial diff = f[W.times_generator(w, i)] - f[w];
      auto q = divide_by_weight(diff, W.image_of_simple(w, i));
      if (!q) throw std::logic_error("divided difference is not polynomial");
      g[w] = std::move(*q);
    }
    xi[v] = std::move(g);
    done[v] = true;
  }
  return xi;
}

/// The Schubert class of the vertex `v` of a full flag graph whose vertex ids
/// are reduced words ("e", "0.1", ...), as a class on that graph.
inline CohClass divided_difference_schubert(const std::vector<std::vector<long long>>& cartan, const GkmGraph& g,
                                            const std::string& v) {
  const FiniteWeylGroup W(cartan);
  if (W.size() != g.vertex_count())
    throw NotFiniteType("graph does not list every element of the finite Weyl group (J must be empty)");
  auto word_of = [](const std::string& id) {
    std::vector<int> w;
    if (id == "e") return w;
    std::size_t pos = 0;
    while (pos < id.size()) {
      auto dot = id.find('.', pos);
      if (dot == std::string::npos) dot = id.size();
      w.push_back(std::stoi(id.substr(pos, dot - pos)));
      pos = dot + 1;
    }
    return w;
  };
  const auto xi = schubert_classes(W);
  const auto& row = xi.at(W.from_word(word_of(v)));
  CohClass f;
  f.degree = static_cast<long>(word_of(v).size());
  for (const auto& vert : g.vertices()) f.values.emplace(vert.id, row[W.from_word(word_of(vert.id))]);
  return f;
}

}  // namespace gkm::oracle
