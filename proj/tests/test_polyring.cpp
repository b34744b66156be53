#include <gtest/gtest.h>

#include "gkm/polyring.hpp"

using namespace gkm;

namespace {

Polynomial P(const std::string& s, std::size_t n = 2) { return parse_polynomial(s, n); }

}  // namespace

TEST(Polynomial, ParsePrintRoundTrip) {
  const auto p = parse_polynomial("3*x1^2*x2 - x3");
  EXPECT_EQ(p.nvars(), 3u);
  EXPECT_EQ(p.str(), "3*x1^2*x2 - x3");
  EXPECT_EQ(parse_polynomial(p.str(), 3), p);
  EXPECT_EQ(P("0").str(), "0");
  EXPECT_EQ(P("-1/2*x1 + 4").str(), "-1/2*x1 + 4");
}

TEST(Polynomial, GrlexOrderGovernsPrinting) {
  EXPECT_EQ(P("x2 + x1^2 + 1 + x1*x2 + x1").str(), "x1^2 + x1*x2 + x1 + x2 + 1");
}

TEST(Polynomial, ParseErrors) {
  EXPECT_THROW(parse_polynomial("x1 +"), PolynomialParseError);
  EXPECT_THROW(parse_polynomial("y"), PolynomialParseError);
  EXPECT_THROW(parse_polynomial("x0"), PolynomialParseError);
  EXPECT_THROW(parse_polynomial("x3", 2), PolynomialParseError);
}

TEST(Polynomial, RingOperations) {
  const auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  EXPECT_EQ(mul(x, x), P("x1^2"));
  EXPECT_EQ(add(x, Polynomial(2)), x);
  EXPECT_EQ(mul(x - y, x + y), P("x1^2 - x2^2"));
  EXPECT_EQ((x + y).pow(2), P("x1^2 + 2*x1*x2 + x2^2"));
  EXPECT_EQ((x - x).size(), 0u);
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ(scale(Rational(0), x).size(), 0u);
  EXPECT_EQ(scale(Rational(3), x), P("3*x1"));
}

TEST(Polynomial, DegreesAndComponents) {
  const auto p = P("x1^2 + x2 + 3");
  EXPECT_EQ(p.degree(), 2);
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_EQ(p.homogeneous_component(1), P("x2"));
  EXPECT_EQ(p.constant_term(), Rational(3));
  EXPECT_EQ(Polynomial(2).degree(), -1);
  EXPECT_TRUE(Polynomial(2).is_homogeneous(5));
  EXPECT_EQ(Polynomial::from_weight(Weight{1, -2}), P("x1 - 2*x2"));
}

TEST(Polynomial, Integrality) {
  EXPECT_TRUE(P("2*x1 - 3").is_integral());
  const auto q = P("1/2*x1 + 1/3*x2");
  EXPECT_FALSE(q.is_integral());
  EXPECT_EQ(q.denominator_lcm(), Integer(6));
}

TEST(Polynomial, ArbitraryPrecision) {
  auto p = Polynomial::constant(1, 2).pow(200);
  EXPECT_EQ(p.str().size(), 61u);
  EXPECT_TRUE(p.is_integral());
}

TEST(Weight, ContentAndCollinearity) {
  EXPECT_TRUE((Weight{1, 2}).is_primitive());
  EXPECT_FALSE((Weight{2, 4}).is_primitive());
  EXPECT_EQ((Weight{0, 0}).content(), Integer(0));
  EXPECT_TRUE(collinear(Weight{1, 2}, Weight{-2, -4}));
  EXPECT_FALSE(collinear(Weight{1, 2}, Weight{2, 1}));
}

TEST(DivideByWeight, Examples) {
  auto q = divide_by_weight(P("x1^2 - x2^2"), Weight{1, -1});
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, P("x1 + x2"));

  auto z = divide_by_weight(Polynomial(2), Weight{3, 1});
  ASSERT_TRUE(z);
  EXPECT_TRUE(z->is_zero());

  EXPECT_FALSE(divide_by_weight(P("x1"), Weight{0, 1}));
  EXPECT_THROW(divide_by_weight(P("x1"), Weight{0, 0}), ZeroWeightError);
}

TEST(DivideByWeight, RationalQuotient) {
  auto q = divide_by_weight(P("x1"), Weight{2, 0});
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, P("1/2"));
}

TEST(DivideByWeight, WeightWiderThanPolynomial) {
  auto q = divide_by_weight(parse_polynomial("x1^2", 1), Weight{1, 0, 0});
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, parse_polynomial("x1", 3));
}

TEST(PairwiseCoprime, Examples) {
  EXPECT_TRUE(pairwise_coprime({Weight{1, 0}, Weight{0, 1}}, CoefficientMode::Z));
  EXPECT_FALSE(pairwise_coprime({Weight{1, 0}, Weight{2, 0}}, CoefficientMode::Q));
  EXPECT_FALSE(pairwise_coprime({Weight{2, 0}, Weight{0, 1}}, CoefficientMode::Z));
  EXPECT_TRUE(pairwise_coprime({Weight{2, 0}, Weight{0, 1}}, CoefficientMode::Q));
  EXPECT_THROW(pairwise_coprime({Weight{0, 0}}, CoefficientMode::Q), ZeroWeightError);
}

TEST(SolveCongruences, ZeroResidues) {
  const auto r = solve_congruences({{Weight{1, 0}, Polynomial(2)}, {Weight{0, 1}, Polynomial(2)}}, 1, 2);
  ASSERT_EQ(r.status, CongruenceStatus::Unique);
  EXPECT_TRUE(r.solution.is_zero());
}

TEST(SolveCongruences, CommonResidue) {
  const auto r = solve_congruences({{Weight{1, -1}, P("x1")}, {Weight{1, 1}, P("x1")}}, 1, 2);
  ASSERT_EQ(r.status, CongruenceStatus::Unique);
  EXPECT_EQ(r.solution, P("x1"));
}

TEST(SolveCongruences, CrossedResidues) {
  const auto r = solve_congruences({{Weight{1, 0}, P("x2")}, {Weight{0, 1}, P("x1")}}, 1, 2);
  ASSERT_EQ(r.status, CongruenceStatus::Unique);
  EXPECT_EQ(r.solution, P("x1 + x2"));
}

TEST(SolveCongruences, TooFewConstraintsIsNonUnique) {
  const auto r = solve_congruences({{Weight{1, 0}, P("x2")}}, 1, 2);
  EXPECT_EQ(r.status, CongruenceStatus::NonUnique);
  EXPECT_EQ(r.solution_dim, 1u);
}

TEST(SolveCongruences, InconsistentIsNoSolution) {
  // collinear moduli with clashing residues
  const auto r = solve_congruences({{Weight{1, 0}, Polynomial(2)}, {Weight{1, 0}, P("x2")}}, 1, 2);
  EXPECT_EQ(r.status, CongruenceStatus::NoSolution);
}

TEST(SolveCongruences, IntegralityCertificate) {
  // h = x1 mod (x1 - x2), h = 0 mod (x1 + x2): h = (x1 + x2)/2
  const std::vector<Congruence> cs = {{Weight{1, -1}, P("x1")}, {Weight{1, 1}, Polynomial(2)}};
  const auto q = solve_congruences(cs, 1, 2, CoefficientMode::Q);
  ASSERT_EQ(q.status, CongruenceStatus::Unique);
  EXPECT_EQ(q.solution, P("1/2*x1 + 1/2*x2"));
  const auto z = solve_congruences(cs, 1, 2, CoefficientMode::Z);
  EXPECT_EQ(z.status, CongruenceStatus::NonIntegral);
  EXPECT_EQ(z.solution.denominator_lcm(), Integer(2));
}

TEST(SolveCongruences, RejectsInhomogeneousResidue) {
  EXPECT_THROW(solve_congruences({{Weight{1, 0}, P("x1 + 1")}}, 1, 2), std::invalid_argument);
}

TEST(Monomials, Counts) {
  EXPECT_EQ(monomials_of_degree(2, 3).size(), 4u);
  EXPECT_EQ(monomial_count(3, 2), 6u);
  EXPECT_EQ(monomial_count(3, -1), 0u);
  EXPECT_EQ(monomial_count(1, 7), 1u);
  const auto ms = monomials_of_degree(2, 2);
  EXPECT_EQ(ms.front(), (Exponent{2, 0}));
  EXPECT_EQ(ms.back(), (Exponent{0, 2}));
}
