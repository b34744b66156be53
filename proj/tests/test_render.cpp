#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gkm/builders.hpp"
#include "gkm/render.hpp"
#include "gkm/solver.hpp"

using namespace gkm;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

// Compares against tests/golden/<name>; GKM_UPDATE_GOLDEN=1 rewrites the file.
void expect_golden(const std::string& name, const std::string& text) {
  const std::string path = std::string(GKM_TEST_DATA) + "/golden/" + name;
  if (std::getenv("GKM_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << text;
    return;
  }
  std::ifstream in(path, std::ios::binary);
  ASSERT_TRUE(in) << "missing golden file " << path;
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), text) << name;
}

RenderOptions svg(std::optional<CohClass> f = std::nullopt) {
  RenderOptions o;
  o.format = RenderOptions::Format::Svg;
  o.decoration = std::move(f);
  return o;
}

}  // namespace

TEST(Factor, ProductsOfWeights) {
  const auto g = build_preset("A2-flag");
  const auto top = g.index_of("0.1.0");
  const auto f = factor_restriction(parse_polynomial("3*x1^2*x2 + 3*x1*x2^2", 2), g, top);
  EXPECT_TRUE(f.complete);
  EXPECT_EQ(f.scalar, Rational(3));
  EXPECT_EQ(f.factors.size(), 3u);

  const auto z = factor_restriction(Polynomial(2), g, top);
  EXPECT_TRUE(z.complete);
  EXPECT_TRUE(z.factors.empty());
  EXPECT_EQ(z.scalar, Rational(0));

  const auto bad = factor_restriction(parse_polynomial("x1^2 + x2^2", 2), g, top);
  EXPECT_FALSE(bad.complete);
}

TEST(Render, SinglePoint) {
  const auto g = build_preset("point");
  const auto dot = render_dot(g).text;
  EXPECT_EQ(count(dot, "[label="), 1u);
  EXPECT_EQ(count(dot, " -- "), 0u);
  const auto s = render_svg(g, svg(CohClass::constant(g, 1))).text;
  EXPECT_EQ(count(s, "<circle"), 1u);
  EXPECT_EQ(count(s, "marker-end"), 0u);
  expect_golden("point.dot", dot);
}

TEST(Render, A2Hexagon) {
  const auto g = build_preset("A2-flag");
  const auto dot = render_dot(g).text;
  EXPECT_EQ(count(dot, " -- "), 9u);
  for (const auto& e : g.edges())
    EXPECT_NE(dot.find("\"" + e.from + "\" -- \"" + e.to + "\" [label=\"" + Polynomial::from_weight(e.weight).str()),
              std::string::npos);
  expect_golden("a2_flag.dot", dot);
  const auto s = render_svg(g).text;
  EXPECT_EQ(count(s, "<circle"), 6u);
  expect_golden("a2_flag.svg", s);
}

TEST(Render, BouquetsOfOmegaSU2Generator) {
  const auto g = build_preset("omega-su2", 4);
  const auto b = canonical_generators(g, 4);
  const auto& x = b.at("0");
  const auto r = render_svg(g, svg(x));
  EXPECT_TRUE(r.warnings.empty());
  // f vanishes at e only; degree 1, so one arrow at each of the other four vertices
  EXPECT_EQ(count(r.text, "marker-end"), 4u);
  expect_golden("omega_su2_f1.svg", r.text);

  const auto top = render_dot(g, RenderOptions{RenderOptions::Format::Dot, b.at("1.0.1.0"), ""}).text;
  EXPECT_EQ(count(top, "xlabel="), 1u);
  expect_golden("omega_su2_f4.dot", top);
}

TEST(Render, NotFactorableFallsBackToText) {
  const auto g = build_preset("s2");
  CohClass f;
  f.values = {{"S", Polynomial(2)}, {"N", parse_polynomial("x1^2 + x1*x2 + x2^2", 2)}};
  const auto r = render_svg(g, svg(f));
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.text.find("x1^2 + x1*x2 + x2^2"), std::string::npos);
  EXPECT_NE(r.text.find("<!-- warning:"), std::string::npos);
}

TEST(Render, LayeredWithoutPositions) {
  const auto g = build_flag_graph(coxeter::finite_cartan('B', 2), {}, 4);
  const auto dot = render_dot(g).text;
  EXPECT_NE(dot.find("\"e\" [label=\"e\\ndim 0\", pos=\"0.00,0.00!\"]"), std::string::npos);
  EXPECT_NE(dot.find("\"0.1.0.1\" [label=\"0.1.0.1\\ndim 8\", pos=\"0.00,4.00!\"]"), std::string::npos);
}

TEST(Render, Deterministic) {
  const auto g = build_preset("A1-4-twisted");
  const auto b = canonical_generators(g, 4);
  const auto a = render_svg(g, svg(b.at("1.0"))).text;
  const auto c = render_svg(g, svg(b.at("1.0"))).text;
  EXPECT_EQ(a, c);
}
