#include <gtest/gtest.h>

#include <algorithm>

#include "gkm/builders.hpp"
#include "gkm/ring.hpp"

using namespace gkm;

namespace {

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

std::string vertex_of_dim(const GkmGraph& g, int dim) {
  for (const auto& v : g.vertices())
    if (v.cell_dim == dim) return v.id;
  return {};
}

}  // namespace

TEST(Multiply, TrivialCases) {
  const auto g = build_preset("A2-flag");
  const auto b = canonical_generators(g, 3);
  const auto& f = b.at("0.1");
  EXPECT_EQ(multiply(f, CohClass::constant(g, 1)).values, f.values);
  EXPECT_TRUE(multiply(CohClass::constant(g, 0), f).is_zero());
}

TEST(Multiply, ProductIsAClassOfAddedDegree) {
  const auto g = build_preset("A2-flag");
  const auto b = canonical_generators(g, 3);
  const auto p = multiply(b.at("0"), b.at("1"));
  EXPECT_TRUE(is_gkm_class(g, p).ok);
  ASSERT_TRUE(p.degree);
  EXPECT_EQ(*p.degree, 2);
  for (const auto& [v, val] : p.values) EXPECT_TRUE(val.is_homogeneous(2));
}

TEST(Poincare, Examples) {
  EXPECT_EQ(poincare_series(build_preset("A2-flag"), 3), (std::vector<std::size_t>{1, 0, 2, 0, 2, 0, 1}));
  EXPECT_EQ(poincare_series(build_preset("point"), 0), (std::vector<std::size_t>{1}));
  EXPECT_EQ(poincare_series(build_preset("omega-su2", 4), 4), (std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1, 0, 1}));
  EXPECT_EQ(poincare_series(build_preset("A2-flag"), 1), (std::vector<std::size_t>{1, 0, 2}));
}

TEST(OrdinaryReduction, Examples) {
  const auto g = build_preset("omega-su2", 3);
  const auto b = canonical_generators(g, 3);
  for (const auto& [v, f] : b.generators) {
    const auto r = ordinary_reduction(expand_in_basis(f, b));
    for (const auto& [w, c] : r) EXPECT_EQ(c, Rational(w == v ? 1 : 0));
  }
  // alpha * f_v has coefficient alpha at v, which reduces to 0
  const auto& f1 = b.at(vertex_of_dim(g, 2));
  CohClass af = multiply(f1, CohClass::constant(g, 1));
  for (auto& [w, val] : af.values) val *= Polynomial::from_weight(Weight{1, 0});
  const auto r = ordinary_reduction(expand_in_basis(af, b));
  EXPECT_EQ(r.at(vertex_of_dim(g, 2)), Rational(0));
}

TEST(PowerCoefficient, OmegaSU2DividedPowers) {
  const auto b = canonical_generators(build_preset("omega-su2", 5), 5);
  for (unsigned n = 1; n <= 5; ++n) {
    const auto r = power_coefficient_detail(b, n);
    EXPECT_EQ(r.coefficient, Rational(factorial(n))) << n;
    EXPECT_TRUE(r.integral) << n;
  }
}

TEST(PowerCoefficient, Twisted) {
  const auto b = canonical_generators(build_preset("A1-4-twisted", 4), 4);
  for (unsigned n = 1; n <= 4; ++n) {
    const Integer expected = factorial(n) * (Integer(1) << (n / 2));
    EXPECT_EQ(power_coefficient(b, n), Rational(expected)) << n;
  }
}

TEST(PowerCoefficient, FirstPowerIsOne) {
  for (const char* p : {"omega-su2", "omega-su3", "A1-4-twisted"}) {
    const auto g = build_preset(p, 2);
    if (std::count_if(g.vertices().begin(), g.vertices().end(), [](const Vertex& v) { return v.cell_dim == 2; }) != 1)
      continue;
    EXPECT_EQ(power_coefficient(canonical_generators(g, 1), 1), Rational(1)) << p;
  }
}

TEST(PowerCoefficient, Errors) {
  const auto b = canonical_generators(build_preset("omega-su2", 4), 2);
  EXPECT_THROW(power_coefficient(b, 3), CutoffTooSmall);
  EXPECT_THROW(power_coefficient(b, 0), std::invalid_argument);
  // two degree-2 generators: x is not determined
  EXPECT_THROW(power_coefficient(canonical_generators(build_preset("A2-flag"), 3), 1), std::invalid_argument);
  // graph truncated below the requested power
  EXPECT_THROW(power_coefficient(canonical_generators(build_preset("omega-su2", 2), 5), 3), CutoffTooSmall);
}

TEST(PowerCoefficient, RecursionThroughProducts) {
  // x * f_{v_n} reduces to (c_{n+1} / c_n) f_{v_{n+1}} in ordinary cohomology
  for (const char* p : {"omega-su2", "A1-4-twisted"}) {
    const auto g = build_preset(p, 4);
    const auto b = canonical_generators(g, 4);
    const auto& x = b.at(vertex_of_dim(g, 2));
    for (unsigned n = 1; n < 4; ++n) {
      const auto e = expand_in_basis(multiply(x, b.at(vertex_of_dim(g, 2 * static_cast<int>(n)))), b);
      const Rational step = ordinary_reduction(e).at(vertex_of_dim(g, 2 * static_cast<int>(n) + 2));
      EXPECT_EQ(step, power_coefficient(b, n + 1) / power_coefficient(b, n)) << p << " n=" << n;
    }
  }
}
