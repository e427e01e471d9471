#include "delpezzo/delpezzo.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <map>

using namespace delpezzo;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }

const Check& find_check(const Report& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return c;
  throw std::out_of_range("no check " + id);
}

void expect_all_pass(const Report& r) {
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.id << ": expected " << c.expected << ", computed " << c.computed;
}

}  // namespace

TEST(Witnesses, EveryScenarioReachesOmega) {
  for (const auto& s : scenario_catalog()) {
    SCOPED_TRACE(s.name);
    const auto w = witness(s.id);
    EXPECT_EQ(w.config.surface.degree(), s.degree);
    EXPECT_TRUE(is_anticanonical(w.config));
    EXPECT_NO_THROW(validate_configuration(w.config));
    EXPECT_EQ(lct_global(w.config).lct, Threshold{s.omega});
    EXPECT_EQ(w.roles.size(), w.config.components.size());
    // Log canonical exactly up to omega.
    EXPECT_TRUE(is_log_canonical(w.config, s.omega).log_canonical);
    EXPECT_FALSE(is_log_canonical(w.config, s.omega * q(1001, 1000)).log_canonical);
  }
}

TEST(Witnesses, CorollaryValues) {
  // The table of global thresholds, row by row.
  const std::map<std::string, Rational> omega{
      {"deg1_no_cuspidal", q(1)},    {"deg1_cuspidal", q(5, 6)}, {"deg2_no_tacnodal", q(5, 6)},
      {"deg2_tacnodal", q(3, 4)},    {"deg3_no_eckardt", q(3, 4)}, {"deg3_eckardt", q(2, 3)},
      {"deg4", q(2, 3)},             {"deg5", q(1, 2)},          {"deg6", q(1, 2)},
      {"deg8_quadric", q(1, 2)},     {"deg7", q(1, 3)},          {"deg9", q(1, 3)},
      {"deg8_F1", q(1, 3)}};
  ASSERT_EQ(scenario_catalog().size(), omega.size());
  for (const auto& s : scenario_catalog()) EXPECT_EQ(s.omega, omega.at(s.name)) << s.name;
}

TEST(Witnesses, NamedExamples) {
  const auto deg4 = witness(Scenario::deg4).config;
  ASSERT_EQ(deg4.components.size(), 3u);
  const Degree4Classes d;
  EXPECT_EQ(deg4.components[0].cls, d.E(1));
  EXPECT_EQ(deg4.components[1].cls, d.L(1, 2));
  EXPECT_EQ(deg4.components[2].cls, d.A(2));
  EXPECT_EQ(lct_at_point(deg4, deg4.points.front().id).lct, Threshold{q(2, 3)});

  const auto deg9 = witness(Scenario::deg9).config;
  ASSERT_EQ(deg9.components.size(), 1u);
  EXPECT_EQ(deg9.components[0].coeff, q(3));
  EXPECT_EQ(lct_global(deg9).minimizer.kind, Minimizer::Kind::component);

  const auto tac = witness(Scenario::deg2_tacnodal).config;
  EXPECT_EQ(lct_global(tac).lct, Threshold{q(3, 4)});
  EXPECT_EQ(lct_global(witness(Scenario::deg1_cuspidal).config).lct, Threshold{q(5, 6)});
  EXPECT_EQ(lct_global(witness(Scenario::deg3_eckardt).config).lct, Threshold{q(2, 3)});

  EXPECT_TRUE(parse_scenario("deg4"));
  EXPECT_FALSE(parse_scenario("deg10"));
}

TEST(Suites, Table1) {
  const auto r = verify_table1();
  EXPECT_EQ(r.checks.size(), 8u);
  expect_all_pass(r);
  const Degree4Classes d;
  // Rows checked here straight from the classes.
  EXPECT_EQ(degree_of(d.Q(1)), 3);
  EXPECT_EQ(self_intersection(d.Q(1)), 1);
  EXPECT_EQ(degree_of(d.B(1)), 2);
  EXPECT_EQ(self_intersection(d.B(1)), 0);
  EXPECT_EQ(degree_of(d.E(1)), 1);
  EXPECT_EQ(self_intersection(d.E(1)), -1);
}

TEST(Suites, Lines) { expect_all_pass(verify_lines()); }

TEST(Suites, LemmaG) {
  const auto r = verify_lemma_G();
  expect_all_pass(r);
  EXPECT_EQ(find_check(r, "lemmaG.case2.root_coefficient").computed.find("5/9") != std::string::npos, true);
  EXPECT_NE(find_check(r, "lemmaG.case1_tacnodal.lct").computed.find("3/4"), std::string::npos);

  // Independent bookkeeping for case 2: coefficients 1/3 on A_2..A_5 and B_1,
  // 2/3 on E_1, all through p with multiplicity one.
  const auto g = lemma_G_divisor(LemmaGCase::case2);
  EXPECT_TRUE(is_anticanonical(g));
  const auto m = multiplicity_at(g, g.points.front().id);
  EXPECT_EQ(m, 4 * q(1, 3) + q(1, 3) + q(2, 3));
  EXPECT_EQ(m, q(7, 3));
  EXPECT_EQ(m * q(2, 3) - 1, q(5, 9));
  EXPECT_NE(m, q(7, 10));
}

TEST(Suites, LemmaH) {
  const auto r = verify_lemma_H();
  expect_all_pass(r);
  const auto h11 = lemma_H_divisor(LemmaHCase::s1_1);
  EXPECT_EQ(multiplicity_at(h11, "p"), q(8, 6));
  EXPECT_EQ(multiplicity_at(lemma_H_divisor(LemmaHCase::s2_1), "p"), q(3, 2));
  EXPECT_EQ(multiplicity_at(lemma_H_divisor(LemmaHCase::s1_2a), "p"), q(3, 2));
  for (auto c : {LemmaHCase::s1_1, LemmaHCase::s1_2a, LemmaHCase::s1_2b, LemmaHCase::s2_1, LemmaHCase::s2_2,
                 LemmaHCase::s2_3}) {
    const auto h = lemma_H_divisor(c);
    EXPECT_TRUE(is_anticanonical(h)) << to_string(c);
    EXPECT_TRUE(is_log_canonical(h, q(2, 3)).log_canonical) << to_string(c);
    for (const auto& comp : h.components) EXPECT_LE(degree_of(comp.cls), 3);
  }
}

TEST(Suites, Table2FromClasses) {
  // Strict transforms after blowing up p, which all six curves pass through
  // with multiplicity one: (C - F)(C' - F) = C.C' - 1 and (C - F).F = 1.
  const Degree4Classes d;
  const std::vector<DivisorClass> curves{d.A(5), d.R(1, 2, 5), d.R(1, 3, 5), d.R(1, 4, 5), d.Q(5), d.E(1)};
  const std::vector<std::vector<int>> table{
      {0, 1, 1, 1, 1, 0, 1}, {0, 0, 1, 1, 1, 0, 1}, {0, 0, 0, 1, 1, 0, 1},
      {0, 0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1}};
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = i + 1; j < curves.size(); ++j)
      EXPECT_EQ(intersect(curves[i], curves[j]) - 1, table[i][j]) << i << "," << j;
    EXPECT_EQ(table[i][6], 1);
  }

  const auto h = lemma_H_divisor(LemmaHCase::s2_2);
  const auto mp = q(3, 5) + 3 * q(1, 5) + q(1, 5) + q(2, 5);
  EXPECT_EQ(multiplicity_at(h, "p"), mp);
  const auto chain = pullback_coefficients(h, "p", q(2, 3));
  ASSERT_GE(chain.size(), 2u);
  EXPECT_EQ(chain[0].second, mp * q(2, 3) - 1);
  EXPECT_EQ(chain[0].second, q(1, 5));
  EXPECT_EQ(chain[1].second, (q(7, 5) + q(9, 5)) * q(2, 3) - 2);
  EXPECT_EQ(chain[1].second, q(2, 15));
}

TEST(Suites, CorollaryAndInvariance) {
  const auto r = verify_corollary();
  EXPECT_EQ(r.checks.size(), 9u);
  expect_all_pass(r);
  expect_all_pass(verify_model_invariance());
}

TEST(Suites, SectionsAndBounds) {
  const auto s = verify_complementary_sections();
  EXPECT_EQ(s.checks.size(), 42u);
  expect_all_pass(s);
  EXPECT_EQ(find_check(s, "sections.E1").computed, "Q1");
  EXPECT_EQ(find_check(s, "sections.A1").computed, "B1");
  const Degree4Classes d;
  EXPECT_EQ(anticanonical_class(d.surface()) - d.E(1), d.Q(1));
  EXPECT_EQ(degree_of(anticanonical_class(d.surface()) - d.R()), 1);
  expect_all_pass(verify_bound_chain());
}

TEST(Named, Families) {
  const auto fams = degree4_families();
  std::size_t total = 0;
  for (const auto& f : fams) {
    total += f.members.size();
    for (const auto& m : f.members) {
      EXPECT_EQ(degree_of(m.cls), f.deg) << m.name;
      EXPECT_EQ(self_intersection(m.cls), f.self) << m.name;
      EXPECT_EQ(degree4_name(m.cls), m.name);
    }
  }
  EXPECT_EQ(total, 16u + 10u + 16u);
  EXPECT_EQ(degree4_named(1).size(), 16u);
  EXPECT_EQ(degree4_named(2).size(), 10u);
  EXPECT_EQ(degree4_named(3).size(), 16u);
}
