#include <gtest/gtest.h>

#include <set>

#include "gkm/builders.hpp"
#include "gkm/graph_io.hpp"

using namespace gkm;
namespace cx = gkm::coxeter;

namespace {

cx::CartanMatrix affine_A1() { return cx::CartanMatrix({{2, -2}, {-2, 2}}); }

std::set<std::tuple<std::string, std::string, std::vector<Integer>>> edge_set(const GkmGraph& g) {
  std::set<std::tuple<std::string, std::string, std::vector<Integer>>> out;
  for (const auto& e : g.edges()) out.emplace(e.from, e.to, e.weight.coeffs());
  return out;
}

bool positions_follow_labels(const GkmGraph& g) {
  for (const auto& e : g.edges()) {
    const auto& p = *g.vertex(e.from).position;
    const auto& q = *g.vertex(e.to).position;
    // (p - q) must be a rational multiple of the weight
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        if ((p[i] - q[i]) * Rational(e.weight[j]) != (p[j] - q[j]) * Rational(e.weight[i])) return false;
  }
  return true;
}

}  // namespace

TEST(BuildFlagGraph, A2) {
  const auto g = build_flag_graph(cx::finite_cartan('A', 2), {}, 3);
  EXPECT_EQ(g.vertex_count(), 6u);
  EXPECT_EQ(g.edge_count(), 9u);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    EXPECT_EQ(g.incident(v).size(), 3u);
    EXPECT_EQ(g.down_edges(v).size(), static_cast<std::size_t>(g.vertex(v).cell_dim / 2));
  }
  EXPECT_TRUE(validate(g).passed());
  EXPECT_EQ(g.vertex("0.1").label, std::optional<std::string>("s0 s1"));
}

TEST(BuildFlagGraph, DegreeZero) {
  for (const auto& cm : {cx::finite_cartan('A', 2), affine_A1()}) {
    const auto g = build_flag_graph(cm, {}, 0);
    EXPECT_EQ(g.vertex_count(), 1u);
    EXPECT_EQ(g.edge_count(), 0u);
  }
}

TEST(BuildFlagGraph, AffineA1Grassmannian) {
  const auto g = build_flag_graph(affine_A1(), {1}, 4);
  ASSERT_EQ(g.vertex_count(), 5u);
  for (std::size_t v = 0; v < 5; ++v) {
    EXPECT_EQ(g.vertex(v).cell_dim, 2 * static_cast<int>(v));
    EXPECT_EQ(g.down_edges(v).size(), v);
  }
  EXPECT_EQ(g.edge_count(), 10u);
  EXPECT_TRUE(validate(g).passed());
}

TEST(BuildFlagGraph, FiniteTypesGiveCompleteOrbits) {
  EXPECT_EQ(build_flag_graph(cx::finite_cartan('B', 2), {}, 10).vertex_count(), 8u);
  EXPECT_EQ(build_flag_graph(cx::finite_cartan('A', 3), {}, 10).vertex_count(), 24u);
  EXPECT_EQ(build_flag_graph(cx::finite_cartan('A', 3), {1, 2}, 10).vertex_count(), 4u);  // CP^3
  EXPECT_EQ(build_flag_graph(cx::finite_cartan('G', 2), {}, 10).vertex_count(), 12u);
}

TEST(BuildFlagGraph, TruncationIsInducedSubgraph) {
  for (const auto& data : {omega_k_data("SU(3)", 0), twisted_a14_data(0)}) {
    for (std::size_t d = 0; d < 4; ++d) {
      const auto small = build_flag_graph(data.cartan, data.parabolic, d);
      const auto big = build_flag_graph(data.cartan, data.parabolic, d + 1);
      EXPECT_EQ(to_json(skeleton(big, static_cast<long>(d)))["edges"], to_json(small)["edges"]);
      EXPECT_EQ(to_json(skeleton(big, static_cast<long>(d)))["vertices"], to_json(small)["vertices"]);
    }
  }
}

TEST(BuildOmegaK, SU2MatchesAffineA1) {
  const auto a = build_omega_k("SU(2)", 3);
  const auto b = build_flag_graph(affine_A1(), {1}, 3);
  EXPECT_EQ(edge_set(a), edge_set(b));
  const auto one = build_omega_k("SU(2)", 1);
  EXPECT_EQ(one.vertex_count(), 2u);
  EXPECT_EQ(one.edge_count(), 1u);
}

TEST(BuildOmegaK, SU3CellCounts) {
  const auto g = build_omega_k("SU(3)", 2);
  const auto reps = cx::enumerate_cosets(cx::untwisted_affine(cx::finite_cartan('A', 2)), {1, 2}, 2);
  EXPECT_EQ(g.vertex_count(), reps.size());
  std::map<int, std::size_t> per_dim;
  for (const auto& v : g.vertices()) ++per_dim[v.cell_dim];
  EXPECT_EQ(per_dim, (std::map<int, std::size_t>{{0, 1}, {2, 1}, {4, 2}}));
  EXPECT_TRUE(validate(g).passed());
}

TEST(BuildOmegaK, UnsupportedType) { EXPECT_THROW(build_omega_k("E11", 2), UnsupportedType); }

TEST(BuildTwisted, Shape) {
  EXPECT_EQ(build_twisted_example(0).vertex_count(), 1u);
  const auto g = build_twisted_example(4);
  ASSERT_EQ(g.vertex_count(), 5u);
  for (std::size_t v = 0; v < 5; ++v) EXPECT_EQ(g.vertex(v).cell_dim, 2 * static_cast<int>(v));
  EXPECT_EQ(g.mode(), CoefficientMode::Z);
  EXPECT_TRUE(validate(g).passed());
  for (const auto& e : g.edges()) EXPECT_TRUE(e.weight.is_primitive());
}

TEST(MomentEmbedding, A2Hexagon) {
  const auto g = build_preset("A2-flag");
  EXPECT_EQ(*g.vertex("e").position, (std::vector<Rational>{1, 1}));
  std::set<std::vector<Rational>> pts;
  for (const auto& v : g.vertices()) pts.insert(*v.position);
  EXPECT_EQ(pts.size(), 6u);
  for (const auto& p : pts) EXPECT_TRUE(pts.count({-p[0], -p[1]}));
  EXPECT_TRUE(positions_follow_labels(g));
}

TEST(MomentEmbedding, OmegaSU2Parabola) {
  const auto g = build_preset("omega-su2", 6);
  std::multiset<Rational> xi;
  for (const auto& v : g.vertices()) {
    const auto& p = *v.position;
    const Rational classical = p[1] - p[0];
    const Rational energy = -p[0];
    EXPECT_EQ(energy, classical * classical) << v.id;
    xi.insert(classical);
  }
  for (const auto& x : xi) EXPECT_EQ(xi.count(x), xi.count(-x));
  EXPECT_TRUE(positions_follow_labels(g));
}

TEST(MomentEmbedding, BadBasePoint) {
  const auto a = cx::finite_cartan('A', 2);
  const auto g = build_flag_graph(a, {}, 3);
  EXPECT_THROW(moment_embedding(g, a, {}, {0, 1}), BadBasePoint);
  EXPECT_THROW(moment_embedding(g, a, {0}, {1, 1}), BadBasePoint);
  EXPECT_THROW(moment_embedding(g, a, {}, {1}), BadBasePoint);
  EXPECT_NO_THROW(moment_embedding(g, a, {}, {Rational(1, 3), 5}));
}

TEST(MomentEmbedding, EveryPresetIsAnEmbeddedGraph) {
  for (const auto& p : presets()) {
    const auto g = build_preset(p.name);
    bool positioned = true;
    for (const auto& v : g.vertices()) positioned = positioned && v.position.has_value();
    if (positioned) {
      EXPECT_TRUE(positions_follow_labels(g)) << p.name;
    }
  }
}

TEST(Presets, AllValidate) {
  for (const auto& p : presets()) {
    const auto g = build_preset(p.name);
    EXPECT_TRUE(validate(g).passed()) << p.name;
    EXPECT_EQ(g.max_cell_dim(), 2 * static_cast<int>(p.default_degree)) << p.name;
  }
  EXPECT_THROW(build_preset("nope"), UnsupportedType);
}

TEST(Presets, RecordOrigin) {
  const auto g = build_preset("A1-4-twisted");
  ASSERT_TRUE(g.origin());
  EXPECT_EQ(g.origin()->cartan, (std::vector<std::vector<long long>>{{2, -1}, {-4, 2}}));
  EXPECT_EQ(g.origin()->parabolic, (std::vector<int>{1}));
  const auto back = graph_from_json(to_json(g));
  EXPECT_EQ(back.origin(), g.origin());
  EXPECT_FALSE(build_preset("s2").origin());
}

TEST(ChainGraph, LabelsAreDifferences) {
  const auto g = build_chain_graph({Weight{0, 0}, Weight{1, 0}, Weight{0, 1}});
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.vertex("c2").cell_dim, 4);
  EXPECT_TRUE(validate(g).passed());
  for (const auto& e : g.edges()) {
    const auto& p = *g.vertex(e.to).position;
    const auto& q = *g.vertex(e.from).position;
    EXPECT_EQ(Rational(e.weight[0]), p[0] - q[0]);
    EXPECT_EQ(Rational(e.weight[1]), p[1] - q[1]);
  }
  EXPECT_THROW(build_chain_graph({}), std::invalid_argument);
}
