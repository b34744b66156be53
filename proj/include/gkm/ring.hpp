// Ring-level computations on graph cohomology.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkm/solver.hpp"

namespace gkm {

struct CutoffTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline CohClass multiply(const CohClass& f, const CohClass& g) { return pointwise(f, g, true); }

/// Ranks of H^j for j = 0..2D: one generator per vertex in even degrees.
inline std::vector<std::size_t> poincare_series(const GkmGraph& g, long max_degree) {
  std::vector<std::size_t> ranks(static_cast<std::size_t>(2 * max_degree + 1), 0);
  for (const auto& v : g.vertices())
    if (v.cell_dim >= 0 && v.cell_dim <= 2 * max_degree) ++ranks[static_cast<std::size_t>(v.cell_dim)];
  return ranks;
}

/// Tensoring out H_T(pt): the constant term of each coefficient.
inline std::map<std::string, Rational> ordinary_reduction(const Expansion& e) {
  std::map<std::string, Rational> out;
  for (const auto& [v, c] : e) out.emplace(v, c.constant_term());
  return out;
}

namespace detail {

inline std::string unique_vertex_of_dim(const GkmGraph& g, int dim) {
  std::optional<std::string> found;
  for (const auto& v : g.vertices()) {
    if (v.cell_dim != dim) continue;
    if (found) throw std::invalid_argument("more than one vertex of cell_dim " + std::to_string(dim));
    found = v.id;
  }
  if (!found) throw CutoffTooSmall("graph has no vertex of cell_dim " + std::to_string(dim));
  return *found;
}

}  // namespace detail

struct PowerResult {
  Rational coefficient;
  std::string generator;  // the degree-2 generator x
  std::string target;     // vertex of cell_dim 2n
  bool integral = true;   // every coefficient of the expansion of x^n is integral
};

/// Ordinary-reduction coefficient of f_{v_n} in x^n, where x is the degree-2
/// generator and v_n the vertex of cell_dim 2n (both must be unique).
inline PowerResult power_coefficient_detail(const GeneratorBasis& basis, unsigned n) {
  const GkmGraph& g = basis.graph;
  if (n == 0) throw std::invalid_argument("power must be positive");
  if (basis.cutoff < static_cast<long>(n))
    throw CutoffTooSmall("basis cutoff " + std::to_string(basis.cutoff) + " is below n = " + std::to_string(n));
  PowerResult r;
  r.generator = detail::unique_vertex_of_dim(g, 2);
  r.target = detail::unique_vertex_of_dim(g, 2 * static_cast<int>(n));

  const CohClass& x = basis.at(r.generator);
  CohClass p = x;
  for (unsigned k = 1; k < n; ++k) p = multiply(p, x);
  const Expansion e = expand_in_basis(p, basis);
  for (const auto& [v, c] : e)
    if (!c.is_integral()) r.integral = false;
  r.coefficient = e.at(r.target).constant_term();
  return r;
}

inline Rational power_coefficient(const GeneratorBasis& basis, unsigned n) {
  return power_coefficient_detail(basis, n).coefficient;
}

}  // namespace gkm
