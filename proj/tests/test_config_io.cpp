#include "delpezzo/delpezzo.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

using namespace delpezzo;

namespace {

const std::string kSamples = SAMPLES_DIR;

std::string sample(const std::string& name) { return kSamples + "/" + name; }

struct Run {
  int code;
  std::string out;
};

/// Runs the CLI with stderr folded into stdout.
Run run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + DPGLCT_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(ConfigIo, LoadsSamples) {
  const auto cusp = load_configuration(sample("cuspidal_cubic.json"));
  EXPECT_EQ(cusp.surface.degree(), 1);
  ASSERT_EQ(cusp.components.size(), 1u);
  EXPECT_EQ(cusp.components[0].coeff, make_rational(1));
  EXPECT_EQ(std::get<Germ>(cusp.points[0].germ).kind, GermKind::cusp);

  const auto tangent = load_configuration(sample("cusp_with_tangent.json"));
  const auto& cl = std::get<WeightedCluster>(tangent.points[0].germ);
  EXPECT_EQ(cl.size(), 3u);
  EXPECT_TRUE(cl.node(2).is_satellite());
  EXPECT_EQ(local_intersection(tangent, "p", "C", "T"), 3);
  EXPECT_NO_THROW(validate_configuration(tangent));

  const auto tac = load_configuration(sample("tacnodal_quartic.json"));
  EXPECT_EQ(std::get<Germ>(tac.points[0].germ).kind, GermKind::tacnode_curve);
}

TEST(ConfigIo, ConfigurationRoundTrip) {
  for (const auto* name : {"cuspidal_cubic.json", "degree4_triple_point.json", "cusp_with_tangent.json",
                           "empty.json", "tacnodal_quartic.json"}) {
    const auto cfg = load_configuration(sample(name));
    const auto once = configuration_to_json(cfg).dump(2);
    const auto twice = configuration_to_json(parse_configuration(once)).dump(2);
    EXPECT_EQ(once, twice) << name;
  }
  for (const auto& s : scenario_catalog()) {
    const auto cfg = witness(s.id).config;
    const auto text = configuration_to_json(cfg).dump(2);
    const auto back = parse_configuration(text);
    EXPECT_EQ(configuration_to_json(back).dump(2), text) << s.name;
    EXPECT_EQ(lct_global(back).lct, Threshold{s.omega}) << s.name;
  }
}

TEST(ConfigIo, SyntaxErrorsArePositioned) {
  try {
    load_configuration(sample("malformed.json"));
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5u);
    EXPECT_EQ(e.column(), 3u);
  }
  try {
    parse_configuration("{\n  \"surface\": {\"degree\": 4,}\n}");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ConfigIo, SchemaErrorsNameTheField) {
  auto message = [](const std::string& text) {
    try {
      parse_configuration(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message(R"({"components": []})").find("surface"), std::string::npos);
  EXPECT_NE(message(R"({"surface": {"degree": 12}})").find("/surface"), std::string::npos);
  EXPECT_NE(message(R"({"surface": {"degree": 9}, "components": [{"id": "L", "class": [1, 0], "coeff": "1"}]})")
                .find("/components/0/class"),
            std::string::npos);
  EXPECT_NE(message(R"({"surface": {"degree": 9}, "components": [{"id": "L", "class": [1], "coeff": "1/0"}]})")
                .find("/components/0/coeff"),
            std::string::npos);
  EXPECT_NE(message(R"({"surface": {"degree": 9}, "components": [{"id": "L", "class": [1], "coeff": "1"}],
                       "points": [{"id": "p", "germ": "A7", "incident": ["L"]}]})")
                .find("/points/0/germ"),
            std::string::npos);
  EXPECT_NE(message(R"({"surface": {"degree": 9}, "components": [{"id": "L", "class": [1], "coeff": "1"}],
                       "points": [{"id": "p", "germ": {"nodes": [
                         {"id": "a", "parent": null, "mults": {"L": 1}},
                         {"id": "b", "parent": "a", "mults": {"L": 1}},
                         {"id": "c", "parent": "a", "mults": {"L": 1}}]}}]})")
                .find("proximity inequality"),
            std::string::npos);
}

TEST(ConfigIo, CertificateRoundTripIsByteExact) {
  std::vector<LctCertificate> certs;
  for (const auto& s : scenario_catalog()) certs.push_back(lct_global(witness(s.id).config));
  certs.push_back(lct_global(load_configuration(sample("empty.json"))));
  certs.push_back(lct_global(load_configuration(sample("cusp_with_tangent.json"))));
  for (const auto& c : certs) {
    const auto text = certificate_to_json(c).dump(2);
    const auto back = certificate_from_json(Json::parse(text));
    EXPECT_EQ(certificate_to_json(back).dump(2), text);
    EXPECT_EQ(back.lct, c.lct);
    EXPECT_EQ(back.minimizer, c.minimizer);
    EXPECT_EQ(back.rows, c.rows);
  }
  const auto cusp = certificate_to_json(lct_global(load_configuration(sample("cuspidal_cubic.json"))));
  EXPECT_EQ(cusp["lct"], "5/6");
  EXPECT_EQ(cusp["coefficients"][0]["coeff"], "1/1");
  EXPECT_EQ(cusp["rows"][2]["v"], "6/1");
}

TEST(Cli, LctText) {
  auto r = run_cli("lct \"" + sample("cuspidal_cubic.json") + "\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "lct = 5/6, minimizer node n3 (k+1=5, v=6)");

  r = run_cli("lct \"" + sample("empty.json") + "\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "lct = inf");

  r = run_cli("lct \"" + sample("degree4_triple_point.json") + "\" --lambda 2/3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "lc = true at lambda = 2/3, equality at node n1 (lambda*v = 2, k+1 = 2)");

  r = run_cli("lct \"" + sample("degree4_triple_point.json") + "\" --lambda 3/4");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("lc = false", 0), 0u);

  r = run_cli("lct \"" + sample("degree4_triple_point.json") + "\" --point p");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "lct = 2/3, minimizer node n1 (k+1=2, v=3)");
}

TEST(Cli, LctJson) {
  const auto r = run_cli("lct \"" + sample("cuspidal_cubic.json") + "\" --json");
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["lct"], "5/6");
  EXPECT_EQ(j["minimizer"]["id"], "n3");
  EXPECT_EQ(certificate_to_json(certificate_from_json(j)).dump(2) + "\n", r.out);
}

TEST(Cli, ExitCodes) {
  auto r = run_cli("lct \"" + sample("inconsistent.json") + "\"");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("E1 and E2"), std::string::npos);

  r = run_cli("lct \"" + sample("malformed.json") + "\"");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("line 5, column 3"), std::string::npos);

  EXPECT_EQ(run_cli("lct \"" + sample("does_not_exist.json") + "\"").code, 2);
  EXPECT_EQ(run_cli("lct \"" + sample("cuspidal_cubic.json") + "\" --lambda x").code, 2);
  EXPECT_EQ(run_cli("lct \"" + sample("cuspidal_cubic.json") + "\" --point q").code, 2);
  EXPECT_EQ(run_cli("verify --suite nonsense").code, 2);
  EXPECT_EQ(run_cli("classes --degree 12 --deg 1 --self -1").code, 2);
  EXPECT_EQ(run_cli("classes --degree 4").code, 2);
  EXPECT_EQ(run_cli("").code, 2);
  EXPECT_EQ(run_cli("witness deg10").code, 2);
}

TEST(Cli, Classes) {
  auto count_rows = [](const std::string& out) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < out.size(); ++i)
      if (out[i] == '(' && (i == 0 || out[i - 1] == '\n')) ++n;
    return n;
  };
  auto r = run_cli("classes --degree 4 --deg 1 --self -1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_rows(r.out), 16u);
  EXPECT_EQ(count_rows(run_cli("classes --degree 9 --deg 1 --self -1").out), 0u);
  EXPECT_EQ(count_rows(run_cli("classes --degree 3 --deg 1 --self -1").out), 27u);
  const auto j = Json::parse(run_cli("classes --degree 4 --deg 2 --self 0 --json").out);
  EXPECT_EQ(j["count"], 10);
  EXPECT_EQ(run_cli("classes --degree 8 --basis quadric --deg 2 --self 0").code, 0);
}

TEST(Cli, VerifySuites) {
  for (const auto* suite : {"table1", "lines", "lemmaG", "lemmaH", "corollary", "sections", "bounds"}) {
    const auto r = run_cli(std::string("verify --suite ") + suite);
    EXPECT_EQ(r.code, 0) << suite << "\n" << r.out;
    EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos) << suite;
  }
  const auto t = run_cli("verify --suite table1");
  EXPECT_NE(t.out.find("table1: 8/8 passed"), std::string::npos);
  const auto c = run_cli("verify --suite corollary --json");
  const auto j = Json::parse(c.out);
  EXPECT_EQ(j["suite"], "corollary");
  EXPECT_EQ(j["passed"], j["total"]);
}

TEST(Cli, WitnessOutputParses) {
  const auto r = run_cli("witness deg2_tacnodal");
  ASSERT_EQ(r.code, 0);
  const auto cfg = parse_configuration(r.out);
  EXPECT_EQ(lct_global(cfg).lct, Threshold{make_rational(3, 4)});
}
