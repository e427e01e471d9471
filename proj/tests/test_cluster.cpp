#include "delpezzo/configuration.hpp"
#include "delpezzo/named.hpp"

#include <gtest/gtest.h>

using namespace delpezzo;

namespace {

ClusterNode node(std::string id, std::optional<std::size_t> parent, std::vector<std::size_t> prox,
                 std::vector<std::int64_t> mults) {
  return {std::move(id), parent, std::move(prox), std::move(mults)};
}

WeightedCluster cusp() { return instantiate_germ(Germ{GermKind::cusp, 1}, {"C"}, {0}); }

}  // namespace

TEST(Germs, ParseAndRender) {
  EXPECT_EQ(parse_germ("A1"), (Germ{GermKind::node, 2}));
  EXPECT_EQ(parse_germ("A2"), (Germ{GermKind::cusp, 1}));
  EXPECT_EQ(parse_germ("A3"), (Germ{GermKind::tacnode_curve, 2}));
  EXPECT_EQ(parse_germ("ordinary(3)"), (Germ{GermKind::ordinary, 3}));
  EXPECT_EQ(parse_germ("smooth_transverse(2)"), (Germ{GermKind::smooth_transverse, 2}));
  EXPECT_FALSE(parse_germ("ordinary(0)"));
  EXPECT_FALSE(parse_germ("ordinary()"));
  EXPECT_FALSE(parse_germ("ordinary(x)"));
  EXPECT_FALSE(parse_germ("A4"));
  for (const auto* text : {"node", "cusp", "tacnode", "tacnode_curve", "ordinary(4)", "smooth_transverse(1)"})
    EXPECT_EQ(to_string(*parse_germ(text)), text);
}

TEST(Germs, Templates) {
  const auto o3 = instantiate_germ(Germ{GermKind::ordinary, 3}, {"a", "b", "c"}, {0, 1, 2});
  ASSERT_EQ(o3.size(), 1u);
  EXPECT_EQ(o3.node(0).mults, (std::vector<std::int64_t>{1, 1, 1}));

  const auto c = cusp();
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.node(0).mults[0], 2);
  EXPECT_EQ(c.node(1).mults[0], 1);
  EXPECT_EQ(c.node(2).mults[0], 1);
  EXPECT_TRUE(c.node(2).is_satellite());

  const auto t = instantiate_germ(Germ{GermKind::tacnode_curve, 2}, {"C"}, {0, 0});
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t.node(0).mults[0], 2);
  EXPECT_EQ(t.node(1).mults[0], 2);

  EXPECT_THROW(instantiate_germ(Germ{GermKind::node, 2}, {"C"}, {0}), ClusterError);
}

TEST(Valuations, CuspAndTacnode) {
  const auto c = cusp();
  EXPECT_EQ(valuations(c, 0), (std::vector<std::int64_t>{2, 3, 6}));
  EXPECT_EQ(valuation(c, "n3", "C"), 6);
  EXPECT_EQ(log_discrepancy(c, "n1"), 2);
  EXPECT_EQ(log_discrepancy(c, "n3"), 5);
  const auto t = instantiate_germ(Germ{GermKind::tacnode_curve, 2}, {"C"}, {0, 0});
  EXPECT_EQ(valuation(t, "n2", "C"), 4);
  EXPECT_EQ(log_discrepancy(t, "n2"), 3);
  const auto smooth = instantiate_germ(Germ{GermKind::smooth_transverse, 1}, {"C"}, {0});
  EXPECT_EQ(valuation(smooth, "n1", "C"), 1);
  EXPECT_THROW(valuation(c, "n9", "C"), ClusterError);
  EXPECT_THROW(valuation(c, "n1", "D"), ClusterError);
  EXPECT_THROW(log_discrepancy(c, "x"), ClusterError);
}

TEST(Valuations, WeightedAndNoether) {
  const auto t = instantiate_germ(Germ{GermKind::tacnode, 2}, {"A", "B"}, {0, 1});
  EXPECT_EQ(noether_intersection(t, 0, 1), 2);
  const auto w = weighted_valuations(t, {make_rational(1, 2), make_rational(1, 3)});
  EXPECT_EQ(w[0], make_rational(5, 6));
  EXPECT_EQ(w[1], make_rational(5, 3));
}

TEST(Validation, RejectsMalformedClusters) {
  // Proximity inequality: the root carries one unit but two points lie on E_1.
  WeightedCluster bad({"C"}, {node("r", std::nullopt, {}, {1}), node("a", 0, {0}, {1}), node("b", 0, {0}, {1})});
  EXPECT_THROW(validate_cluster(bad), ClusterError);
  // Satellite of a point not on the named exceptional curve.
  WeightedCluster sat({"C"}, {node("r", std::nullopt, {}, {2}), node("a", 0, {0}, {1}),
                              node("b", 1, {1, 2}, {1})});
  EXPECT_THROW(validate_cluster(sat), ClusterError);
  WeightedCluster second_root({"C"}, {node("r", std::nullopt, {}, {1}), node("s", std::nullopt, {}, {1})});
  EXPECT_THROW(validate_cluster(second_root), ClusterError);
  WeightedCluster order({"C"}, {node("r", std::nullopt, {}, {1}), node("a", 2, {2}, {0}), node("b", 0, {0}, {0})});
  EXPECT_THROW(validate_cluster(order), ClusterError);
  WeightedCluster missing({"C", "D"}, {node("r", std::nullopt, {}, {1, 0})});
  EXPECT_THROW(validate_cluster(missing), ClusterError);
  WeightedCluster dup({"C"}, {node("r", std::nullopt, {}, {1}), node("r", 0, {0}, {1})});
  EXPECT_THROW(validate_cluster(dup), ClusterError);
  WeightedCluster negative({"C"}, {node("r", std::nullopt, {}, {-1})});
  EXPECT_THROW(validate_cluster(negative), ClusterError);
  EXPECT_NO_THROW(validate_cluster(cusp()));
}

TEST(Validation, ReorderKeepsValues) {
  WeightedCluster cl({"C", "D"}, {node("r", std::nullopt, {}, {2, 1}), node("a", 0, {0}, {1, 1}),
                                  node("b", 0, {0}, {0, 0}), node("c", 1, {1, 0}, {1, 0})});
  ASSERT_NO_THROW(validate_cluster(cl));
  const auto re = reorder_nodes(cl, {0, 2, 1, 3});
  EXPECT_EQ(valuation(re, "c", "C"), valuation(cl, "c", "C"));
  EXPECT_EQ(log_discrepancy(re, "c"), log_discrepancy(cl, "c"));
  EXPECT_THROW(reorder_nodes(cl, {1, 0, 2, 3}), ClusterError);
  EXPECT_THROW(reorder_nodes(cl, {0, 0, 1, 2}), ClusterError);
}

namespace {

DivisorConfiguration tangent_line_and_cusp() {
  // Cuspidal cubic 3H with its cuspidal tangent H: explicit cluster where the
  // line follows the cusp through the free point and no further.
  const auto s = make_surface(9);
  DivisorConfiguration cfg{s, {}, {}};
  cfg.components.push_back({"C", 3 * hyperplane(s), make_rational(1)});
  cfg.components.push_back({"T", hyperplane(s), make_rational(1)});
  WeightedCluster cl({"C", "T"}, {node("n1", std::nullopt, {}, {2, 1}), node("n2", 0, {0}, {1, 1}),
                                  node("n3", 1, {1, 0}, {1, 0})});
  cfg.points.push_back({"p", cl, {}, {}});
  return cfg;
}

}  // namespace

TEST(Configuration, LocalIntersections) {
  const Degree4Classes d;
  DivisorConfiguration cfg{d.surface(), {}, {}};
  cfg.components = {{"E1", d.E(1), make_rational(1)}, {"L12", d.L(1, 2), make_rational(1)}};
  cfg.points.push_back({"p", Germ{GermKind::smooth_transverse, 2}, {{"E1", {}}, {"L12", {}}}, {}});
  EXPECT_EQ(local_intersection(cfg, "p", "E1", "L12"), 1);
  EXPECT_EQ(multiplicity_at(cfg, "p"), 2);

  auto tac = cfg;
  tac.components = {{"A1", d.A(1), make_rational(1)}, {"B1", d.B(1), make_rational(1)}};
  tac.points[0] = {"p", Germ{GermKind::tacnode, 2}, {{"A1", {}}, {"B1", {}}}, {}};
  EXPECT_EQ(local_intersection(tac, "p", "A1", "B1"), 2);
  EXPECT_NO_THROW(validate_configuration(tac));

  const auto line = tangent_line_and_cusp();
  EXPECT_EQ(local_intersection(line, "p", "C", "T"), 3);
  EXPECT_EQ(multiplicity_at(line, "p"), 3);
  EXPECT_NO_THROW(validate_configuration(line));
  EXPECT_THROW(local_intersection(cfg, "p", "E1", "zz"), ConfigurationError);
}

TEST(Configuration, IncidenceSlots) {
  const Degree4Classes d;
  DivisorConfiguration cfg{d.surface(), {}, {}};
  cfg.components = {{"C", d.A(1), make_rational(1)}, {"L", d.L(2, 3), make_rational(1)}};
  // The last unbranched component absorbs the remaining slots.
  cfg.points.push_back({"p", Germ{GermKind::ordinary, 3}, {{"L", {}}, {"C", {}}}, {}});
  const auto cl = compile_configuration(cfg, "p");
  ASSERT_EQ(cl.components(), (std::vector<std::string>{"C", "L"}));
  EXPECT_EQ(cl.node(0).mults, (std::vector<std::int64_t>{2, 1}));

  auto pinned = cfg;
  pinned.points[0].incident = {{"C", 2}, {"L", {}}};
  EXPECT_EQ(compile_configuration(pinned, "p").node(0).mults, (std::vector<std::int64_t>{1, 2}));

  auto twice = cfg;
  twice.points[0].incident = {{"C", 0}, {"L", 0}};
  EXPECT_THROW(compile_configuration(twice, "p"), ConfigurationError);
  auto range = cfg;
  range.points[0].incident = {{"C", 5}};
  EXPECT_THROW(compile_configuration(range, "p"), ConfigurationError);
  auto unknown = cfg;
  unknown.points[0].incident = {{"X", {}}};
  EXPECT_THROW(compile_configuration(unknown, "p"), ConfigurationError);
  auto unassigned = cfg;
  unassigned.points[0].incident = {{"C", 0}};
  EXPECT_THROW(compile_configuration(unassigned, "p"), ConfigurationError);
}

TEST(Configuration, InconsistentIntersections) {
  const Degree4Classes d;
  DivisorConfiguration cfg{d.surface(), {}, {}};
  // E1 and E2 are disjoint, so they cannot share a point.
  cfg.components = {{"E1", d.E(1), make_rational(1)}, {"E2", d.E(2), make_rational(1)}};
  cfg.points.push_back({"p", Germ{GermKind::node, 2}, {{"E1", {}}, {"E2", {}}}, {}});
  try {
    validate_configuration(cfg);
    FAIL() << "expected InconsistentIntersectionError";
  } catch (const InconsistentIntersectionError& e) {
    EXPECT_EQ(e.first(), "E1");
    EXPECT_EQ(e.second(), "E2");
  }
  // A declared local intersection that the germ contradicts.
  DivisorConfiguration decl{d.surface(), {}, {}};
  decl.components = {{"A1", d.A(1), make_rational(1)}, {"B1", d.B(1), make_rational(1)}};
  decl.points.push_back({"p", Germ{GermKind::node, 2}, {{"A1", {}}, {"B1", {}}}, {{"A1", "B1", 2}}});
  EXPECT_THROW(compile_configuration(decl, "p"), InconsistentIntersectionError);
  decl.points[0].intersections[0].value = 1;
  EXPECT_NO_THROW(validate_configuration(decl));
}

TEST(Configuration, StructuralErrors) {
  const Degree4Classes d;
  DivisorConfiguration cfg{d.surface(), {}, {}};
  cfg.components = {{"E1", d.E(1), make_rational(1)}, {"E1", d.E(2), make_rational(1)}};
  EXPECT_THROW(validate_configuration(cfg), ConfigurationError);
  cfg.components = {{"E1", d.E(1), make_rational(0)}};
  EXPECT_THROW(validate_configuration(cfg), ConfigurationError);
  EXPECT_NO_THROW(validate_configuration(cfg, false));
  cfg.components = {{"H", hyperplane(make_surface(9)), make_rational(1)}};
  EXPECT_THROW(validate_configuration(cfg), ConfigurationError);
  EXPECT_THROW(cfg.point("nowhere"), ConfigurationError);
}

TEST(Configuration, AnticanonicalAndScaling) {
  const Degree4Classes d;
  DivisorConfiguration cfg{d.surface(), {}, {}};
  cfg.components = {{"E1", d.E(1), make_rational(1)}, {"L12", d.L(1, 2), make_rational(1)},
                    {"A2", d.A(2), make_rational(1)}};
  EXPECT_TRUE(is_anticanonical(cfg));
  const auto half = scaled(cfg, make_rational(1, 2));
  EXPECT_FALSE(is_anticanonical(half));
  EXPECT_EQ(half.components[2].coeff, make_rational(1, 2));
}
