#include <gtest/gtest.h>

#include "gkm/builders.hpp"
#include "gkm/graph.hpp"
#include "gkm/graph_io.hpp"

using namespace gkm;

namespace {

GkmGraph sphere() { return build_preset("s2"); }

CohClass make_class(const GkmGraph& g, std::initializer_list<std::pair<const char*, const char*>> vals) {
  CohClass f;
  for (const auto& [id, p] : vals) f.values.emplace(id, parse_polynomial(p, g.rank()));
  return f;
}

std::string fixture(const std::string& name) { return std::string(GKM_TEST_DATA) + "/fixtures/" + name; }

}  // namespace

TEST(GkmGraph, CanonicalOrdering) {
  GkmGraph g(2, CoefficientMode::Z, {{"b", 2, {}, {}}, {"z", 0, {}, {}}, {"a", 2, {}, {}}},
             {{"b", "z", Weight{0, 1}}, {"a", "z", Weight{1, 0}}});
  EXPECT_EQ(g.vertex(0).id, "z");
  EXPECT_EQ(g.vertex(1).id, "a");
  EXPECT_EQ(g.vertex(2).id, "b");
  EXPECT_EQ(g.edges()[0].from, "z");
  EXPECT_EQ(g.edges()[0].to, "a");
  EXPECT_EQ(g.down_edges(2).size(), 1u);
  EXPECT_EQ(g.down_weight_product(2), parse_polynomial("x2", 2));
}

TEST(GkmGraph, ConstructionErrors) {
  EXPECT_THROW(GkmGraph(1, CoefficientMode::Z, {{"a", 0, {}, {}}, {"a", 2, {}, {}}}, {}), GraphError);
  EXPECT_THROW(GkmGraph(1, CoefficientMode::Z, {{"a", 0, {}, {}}}, {{"a", "b", Weight{1}}}), GraphError);
  EXPECT_THROW(GkmGraph(2, CoefficientMode::Z, {{"a", 0, {}, {}}, {"b", 2, {}, {}}}, {{"a", "b", Weight{1}}}),
               GraphError);
}

TEST(Validate, SpherePasses) {
  const auto rep = validate(sphere());
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.lines().back(), "PASS");
}

TEST(Validate, CollinearDownEdgesFail) {
  GkmGraph g(2, CoefficientMode::Q, {{"o", 0, {}, {}}, {"a", 2, {}, {}}, {"t", 4, {}, {}}},
             {{"o", "a", Weight{0, 1}}, {"o", "t", Weight{1, 0}}, {"a", "t", Weight{2, 0}}});
  const auto rep = validate(g);
  EXPECT_FALSE(rep.passed());
  EXPECT_TRUE(rep.has(IssueKind::NotCoprime, "t"));
}

TEST(Validate, ImprimitiveOnlyMattersInZ) {
  const std::vector<Vertex> vs = {{"o", 0, {}, {}}, {"n", 2, {}, {}}};
  const std::vector<Edge> es = {{"o", "n", Weight{2, 0}}};
  EXPECT_TRUE(validate(GkmGraph(2, CoefficientMode::Z, vs, es)).has(IssueKind::ImprimitiveWeight, "n"));
  EXPECT_TRUE(validate(GkmGraph(2, CoefficientMode::Q, vs, es)).passed());
}

TEST(Validate, StructuralFailures) {
  GkmGraph eq(1, CoefficientMode::Q, {{"o", 0, {}, {}}, {"a", 2, {}, {}}, {"b", 2, {}, {}}},
              {{"o", "a", Weight{1}}, {"o", "b", Weight{1}}, {"a", "b", Weight{1}}});
  EXPECT_TRUE(validate(eq).has(IssueKind::EqualDimensionEdge));

  GkmGraph two(1, CoefficientMode::Q, {{"o", 0, {}, {}}, {"p", 0, {}, {}}}, {});
  const auto rep = validate(two);
  EXPECT_TRUE(rep.has(IssueKind::BottomVertexCount));
  EXPECT_TRUE(rep.has(IssueKind::Disconnected));
  EXPECT_FALSE(rep.connected);

  GkmGraph zero(1, CoefficientMode::Q, {{"o", 0, {}, {}}, {"n", 2, {}, {}}}, {{"o", "n", Weight{0}}});
  EXPECT_TRUE(validate(zero).has(IssueKind::ZeroWeight));

  GkmGraph loop(1, CoefficientMode::Q, {{"o", 0, {}, {}}}, {{"o", "o", Weight{1}}});
  EXPECT_TRUE(validate(loop).has(IssueKind::SelfLoop));
}

TEST(Validate, CorruptedFixtures) {
  const auto odd = validate(load_graph(fixture("odd_cell.json")));
  EXPECT_TRUE(odd.has(IssueKind::OddCellDim, "N"));
  const auto col = validate(load_graph(fixture("collinear_weights.json")));
  EXPECT_TRUE(col.has(IssueKind::NotCoprime, "p2"));
  const auto down = validate(load_graph(fixture("wrong_down_edges.json")));
  EXPECT_TRUE(down.has(IssueKind::WrongDownEdgeCount, "p2"));
  EXPECT_EQ(down.issues.front().line(), "FAIL down-edge-count p2: 1 down-edges, expected cell_dim/2 = 2");
}

TEST(IsGkmClass, SphereExamples) {
  const auto g = sphere();
  EXPECT_TRUE(is_gkm_class(g, CohClass::constant(g, 7)).ok);
  EXPECT_TRUE(is_gkm_class(g, make_class(g, {{"S", "0"}, {"N", "x1"}})).ok);
  const auto bad = is_gkm_class(g, make_class(g, {{"S", "0"}, {"N", "x2"}}));
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.failing_edge);
  EXPECT_EQ(*bad.failing_edge, 0u);
}

TEST(IsGkmClass, WitnessesAreQuotients) {
  const auto g = sphere();
  const auto chk = is_gkm_class(g, make_class(g, {{"S", "x2^2"}, {"N", "x1^2 + x2^2"}}));
  ASSERT_TRUE(chk.ok);
  ASSERT_EQ(chk.witnesses.size(), 1u);
  const Polynomial back = chk.witnesses[0] * Polynomial::from_weight(Weight{1, 0});
  const Polynomial diff = parse_polynomial("x1^2", 2);
  EXPECT_TRUE(back == diff || back == -diff);
}

TEST(IsGkmClass, MissingValueThrows) {
  const auto g = sphere();
  EXPECT_THROW(is_gkm_class(g, make_class(g, {{"S", "0"}})), MissingVertexValue);
}

TEST(Skeleton, Filtration) {
  const auto a2 = build_preset("A2-flag");
  const auto s0 = skeleton(a2, 0);
  EXPECT_EQ(s0.vertex_count(), 1u);
  EXPECT_EQ(s0.edge_count(), 0u);
  const auto s1 = skeleton(a2, 1);
  EXPECT_EQ(s1.vertex_count(), 3u);
  ASSERT_EQ(s1.edge_count(), 2u);
  EXPECT_EQ(s1.edges()[0].weight, (Weight{1, 0}));
  EXPECT_EQ(s1.edges()[1].weight, (Weight{0, 1}));
  EXPECT_EQ(to_json(skeleton(a2, 10)), to_json(a2));
  for (long k = 0; k <= 3; ++k)
    for (long j = 0; j <= 3; ++j) EXPECT_EQ(to_json(skeleton(skeleton(a2, k), j)), to_json(skeleton(a2, std::min(j, k))));
}

TEST(RelativeClass, Examples) {
  const auto g = sphere();
  CohClass zero = CohClass::constant(g, 0);
  EXPECT_TRUE(is_relative_class(g, zero, 0));
  EXPECT_TRUE(is_relative_class(g, make_class(g, {{"S", "0"}, {"N", "x1"}}), 0));
  EXPECT_FALSE(is_relative_class(g, CohClass::constant(g, 1), 0));
}

TEST(Pointwise, SumAndProduct) {
  const auto g = sphere();
  const auto f = make_class(g, {{"S", "0"}, {"N", "x1"}});
  const auto sum = pointwise(f, f, false);
  EXPECT_EQ(sum.at("N"), parse_polynomial("2*x1", 2));
  const auto prod = pointwise(f, f, true);
  EXPECT_EQ(prod.at("N"), parse_polynomial("x1^2", 2));
  EXPECT_TRUE(is_gkm_class(g, prod).ok);
}

TEST(GraphJson, RoundTripIsByteStable) {
  for (const auto& p : presets()) {
    const auto g = build_preset(p.name);
    const std::string once = dump(to_json(g));
    const std::string twice = dump(to_json(graph_from_json(Json::parse(once))));
    EXPECT_EQ(once, twice) << p.name;
    EXPECT_TRUE(validate(graph_from_json(Json::parse(once))).passed()) << p.name;
  }
}

TEST(GraphJson, InputOrderDoesNotMatter) {
  const auto a = Json::parse(R"({"rank":1,"vertices":[{"id":"n","cell_dim":2},{"id":"s","cell_dim":0}],
                                 "edges":[{"from":"n","to":"s","weight":[1]}]})");
  const auto b = Json::parse(R"({"rank":1,"mode":"Z","vertices":[{"id":"s","cell_dim":0},{"id":"n","cell_dim":2}],
                                 "edges":[{"from":"s","to":"n","weight":[1]}]})");
  EXPECT_EQ(dump(to_json(graph_from_json(a))), dump(to_json(graph_from_json(b))));
}

TEST(GraphJson, MalformedInput) {
  EXPECT_THROW(graph_from_json(Json::parse(R"({"vertices":[]})")), IoError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"rank":1,"vertices":[{"id":"a","cell_dim":0},{"id":"a","cell_dim":0}],"edges":[]})")),
               std::exception);
  EXPECT_THROW(parse_json("{", "x"), IoError);
  EXPECT_THROW(load_graph("/nonexistent/graph.json"), IoError);
}

TEST(ClassJson, RoundTrip) {
  const auto g = sphere();
  auto f = make_class(g, {{"S", "0"}, {"N", "1/2*x1^2 - x2"}});
  f.degree = 2;
  const auto back = class_from_json(to_json(f, g), g.rank());
  EXPECT_EQ(back, f);
}
