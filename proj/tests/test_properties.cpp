#include "delpezzo/properties.hpp"

#include <gtest/gtest.h>

using namespace delpezzo;

namespace {

void expect_clean(const PropertyOutcome& o, std::size_t cases) {
  EXPECT_EQ(o.cases, cases) << o.name << " ran out of attempts (" << o.attempts << ")";
  EXPECT_EQ(o.failures, 0u) << o.name << ": " << o.counterexample;
}

}  // namespace

TEST(Properties, Skoda) { expect_clean(property_skoda(42, 1000), 1000); }
TEST(Properties, Adjunction) { expect_clean(property_adjunction(43, 1000), 1000); }
TEST(Properties, TwoCurves) { expect_clean(property_two_curves(44, 1000), 1000); }
TEST(Properties, Convexity) { expect_clean(property_convexity(45, 1000), 1000); }
TEST(Properties, Transfer) { expect_clean(property_transfer(46, 1000), 1000); }
TEST(Properties, Monotonicity) { expect_clean(property_monotonicity(47, 1000), 1000); }
TEST(Properties, OrderIndependence) { expect_clean(property_order_independence(48, 1000), 1000); }

TEST(Properties, OtherSeeds) {
  for (const auto& o : run_properties(7, 300)) expect_clean(o, 300);
}

TEST(Properties, Deterministic) {
  const auto a = render_text(verify_properties(42, 100));
  const auto b = render_text(verify_properties(42, 100));
  EXPECT_EQ(a, b);
}

TEST(Properties, HarnessReportsViolations) {
  // A false statement: every random divisor is lc at lambda = 1.
  const auto o = detail::run_property("false_claim", 3, 200, [](Rng& rng, std::string& note) -> std::optional<bool> {
    const auto cl = random_cluster(rng, 1);
    const auto cfg = local_configuration(cl, {make_rational(rng.uniform(1, 3))});
    note = detail::describe(cl, cfg.coefficients(), make_rational(1));
    return is_log_canonical(cfg, make_rational(1)).log_canonical;
  });
  EXPECT_EQ(o.cases, 200u);
  EXPECT_GT(o.failures, 0u);
  EXPECT_FALSE(o.counterexample.empty());
  const auto r = verify_properties(1, 5);
  EXPECT_EQ(r.checks.size(), 7u);
}

TEST(Properties, RandomClustersAreValid) {
  Rng rng(99);
  for (int i = 0; i < 2000; ++i) {
    const auto cl = random_cluster(rng, static_cast<std::size_t>(rng.uniform(1, 4)));
    EXPECT_NO_THROW(validate_cluster(cl));
    const auto order = random_topological_order(rng, cl);
    EXPECT_NO_THROW(reorder_nodes(cl, order));
  }
}
