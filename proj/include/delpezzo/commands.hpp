#pragma once

// Command implementations behind the dpglct executable. Each returns the
// exit code and the text destined for stdout and stderr.
//
// Exit codes: 0 ok, 1 negative answer (not lc, failed checks),
// 2 usage or parse error, 3 inconsistent input.

#include "delpezzo/config_io.hpp"
#include "delpezzo/properties.hpp"
#include "delpezzo/verify.hpp"

#include <optional>
#include <string>

namespace delpezzo {

enum ExitCode : int { exit_ok = 0, exit_negative = 1, exit_usage = 2, exit_inconsistent = 3 };

struct CommandResult {
  int exit_code = exit_ok;
  std::string out;
  std::string err;
};

inline std::string describe_class(const DivisorClass& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto a = c[i];
    if (a == 0) continue;
    const auto mag = a < 0 ? -a : a;
    out += out.empty() ? (a < 0 ? "-" : "") : (a < 0 ? " - " : " + ");
    out += (mag == 1 ? "" : std::to_string(mag)) + c.surface().basis_label(i);
  }
  return out.empty() ? "0" : out;
}

inline CommandResult cmd_classes(int degree, const std::string& basis, std::int64_t deg, std::int64_t self, bool json) {
  CommandResult r;
  BasisKind kind;
  if (basis == "blowup") kind = BasisKind::blowup;
  else if (basis == "quadric") kind = BasisKind::quadric;
  else return {exit_usage, "", "unknown basis '" + basis + "' (expected blowup or quadric)\n"};
  std::optional<SurfaceModel> surface;
  std::vector<DivisorClass> classes;
  try {
    surface = make_surface(degree, kind);
    classes = enumerate_classes(*surface, deg, self);
  } catch (const std::exception& e) {
    return {exit_usage, "", std::string(e.what()) + "\n"};
  }
  const auto& s = *surface;
  if (json) {
    Json j;
    j["surface"] = {{"degree", degree}, {"basis", basis}};
    j["deg"] = deg;
    j["self"] = self;
    j["count"] = classes.size();
    j["classes"] = Json::array();
    for (const auto& c : classes) j["classes"].push_back(class_to_json(c));
    r.out = j.dump(2) + "\n";
    return r;
  }
  r.out = "# " + s.name() + ", deg " + std::to_string(deg) + ", self-intersection " + std::to_string(self) + ": " +
          std::to_string(classes.size()) + " classes\n";
  for (const auto& c : classes) r.out += to_string(c) + "  " + describe_class(c) + "\n";
  return r;
}

namespace detail {

inline std::string minimizer_text(const LctCertificate& c, bool show_point) {
  if (c.lct.is_infinite()) return "lct = inf";
  std::string out = "lct = " + format_threshold(c.lct);
  if (c.minimizer.kind == Minimizer::Kind::component) {
    for (const auto& row : c.coefficients)
      if (row.component == c.minimizer.id)
        out += ", minimizer component " + row.component + " (coeff " + format_rational(row.coeff) + ")";
  } else {
    for (const auto& row : c.rows)
      if (row.point == c.minimizer.point && row.node == c.minimizer.id)
        out += ", minimizer node " + row.node + (show_point ? " at " + row.point : "") + " (k+1=" +
               std::to_string(row.k + 1) + ", v=" + format_rational(row.v) + ")";
  }
  return out;
}

inline std::string certificate_text(const LctCertificate& c) {
  std::string out;
  for (const auto& row : c.coefficients)
    out += "  component " + row.component + "  d=" + format_rational(row.coeff) + "  1/d=" + format_threshold(row.ratio) + "\n";
  for (const auto& row : c.rows)
    out += "  point " + row.point + " node " + row.node + "  k+1=" + std::to_string(row.k + 1) + "  v=" +
           format_rational(row.v) + "  (k+1)/v=" + format_threshold(row.ratio) + "\n";
  return out;
}

inline std::string locus_text(const NonKltLocus& l) {
  return "non-klt locus: components [" + join(l.components) + "], points [" + join(l.points) + "]";
}

}  // namespace detail

/// Loads, validates and evaluates a configuration.
inline CommandResult cmd_lct_text(const std::string& text, const std::string& source,
                                  const std::optional<std::string>& point, const std::optional<std::string>& lambda_text,
                                  bool json) {
  CommandResult r;
  DivisorConfiguration cfg{make_surface(9), {}, {}};
  try {
    cfg = parse_configuration(text);
    validate_configuration(cfg);
    if (point) cfg.point(*point);
  } catch (const ParseError& e) {
    return {exit_usage, "", source + ": " + e.what() + "\n"};
  } catch (const InconsistentIntersectionError& e) {
    return {exit_inconsistent, "", source + ": inconsistent intersections of " + e.first() + " and " + e.second() +
                                       ": " + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {exit_usage, "", source + ": " + e.what() + "\n"};
  }

  const auto cert = point ? lct_at_point(cfg, *point) : lct_global(cfg);
  const bool show_point = cfg.points.size() > 1;
  if (!lambda_text) {
    if (json) {
      r.out = certificate_to_json(cert).dump(2) + "\n";
    } else {
      r.out = detail::minimizer_text(cert, show_point) + "\n" + detail::certificate_text(cert);
    }
    return r;
  }

  const auto lambda = parse_rational(*lambda_text);
  if (!lambda || *lambda < 0) return {exit_usage, "", "--lambda expects a non-negative rational p/q\n"};
  const auto verdict = is_log_canonical(cfg, *lambda, point);
  const auto locus = non_klt_locus(cfg, *lambda);
  r.exit_code = verdict.log_canonical ? exit_ok : exit_negative;
  if (json) {
    Json j;
    j["lambda"] = to_string(*lambda);
    j["log_canonical"] = verdict.log_canonical;
    j["tight"] = verdict.tight;
    j["non_klt"] = {{"components", locus.components}, {"points", locus.points}};
    j["certificate"] = certificate_to_json(verdict.certificate);
    r.out = j.dump(2) + "\n";
    return r;
  }
  std::string head = std::string("lc = ") + (verdict.log_canonical ? "true" : "false") + " at lambda = " +
                     format_rational(*lambda);
  // Name the binding constraint: the first tight one when lc, else the
  // first violated one.
  const auto& c = verdict.certificate;
  std::string binding;
  for (const auto& row : c.coefficients) {
    const auto load = *lambda * row.coeff;
    if (binding.empty() && (verdict.log_canonical ? load == 1 : load > 1))
      binding = "component " + row.component + " (lambda*d = " + format_rational(load) + ")";
  }
  for (const auto& row : c.rows) {
    const auto load = *lambda * row.v;
    if (binding.empty() && (verdict.log_canonical ? load == row.k + 1 : load > row.k + 1))
      binding = "node " + row.node + (show_point ? " at " + row.point : "") + " (lambda*v = " + format_rational(load) +
                ", k+1 = " + std::to_string(row.k + 1) + ")";
  }
  if (!binding.empty()) head += (verdict.log_canonical ? ", equality at " : ", violated at ") + binding;
  r.out = head + "\n" + detail::minimizer_text(c, show_point) + "\n" + detail::locus_text(locus) + "\n" +
          detail::certificate_text(c);
  return r;
}

inline CommandResult cmd_lct(const std::string& path, const std::optional<std::string>& point,
                             const std::optional<std::string>& lambda, bool json) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {exit_usage, "", "cannot open '" + path + "'\n"};
  std::stringstream buf;
  buf << in.rdbuf();
  return cmd_lct_text(buf.str(), path, point, lambda, json);
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"table1",    "lines",    "lemmaG", "lemmaH",     "corollary",
                                              "sections",  "bounds",   "properties", "all"};
  return names;
}

inline std::optional<Report> run_suite(const std::string& suite, std::uint64_t seed, std::size_t cases) {
  if (suite == "table1") return verify_table1();
  if (suite == "lines") return verify_lines();
  if (suite == "lemmaG") return verify_lemma_G();
  if (suite == "lemmaH") return verify_lemma_H();
  if (suite == "corollary") {
    auto r = verify_corollary();
    r.append(verify_model_invariance());
    return r;
  }
  if (suite == "sections") return verify_complementary_sections();
  if (suite == "bounds") return verify_bound_chain();
  if (suite == "properties") return verify_properties(seed, cases);
  if (suite == "all") {
    Report all{"all", {}};
    for (const auto& name : suite_names())
      if (name != "all") all.append(*run_suite(name, seed, cases));
    return all;
  }
  return std::nullopt;
}

inline CommandResult cmd_verify(const std::string& suite, std::uint64_t seed, std::size_t cases, bool json) {
  const auto report = run_suite(suite, seed, cases);
  if (!report) {
    std::string known;
    for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
    return {exit_usage, "", "unknown suite '" + suite + "' (known: " + known + ")\n"};
  }
  CommandResult r;
  r.exit_code = report->passed() ? exit_ok : exit_negative;
  r.out = json ? report_to_json(*report).dump(2) + "\n" : render_text(*report);
  return r;
}

inline CommandResult cmd_witness(const std::string& name) {
  const auto id = parse_scenario(name);
  if (!id) {
    std::string known;
    for (const auto& s : scenario_catalog()) known += (known.empty() ? "" : ", ") + s.name;
    return {exit_usage, "", "unknown scenario '" + name + "' (known: " + known + ")\n"};
  }
  return {exit_ok, configuration_to_json(witness(*id).config).dump(2) + "\n", ""};
}

}  // namespace delpezzo
