#pragma once

// JSON forms of configurations, certificates and reports.
//
// Configuration file:
//   {
//     "surface": {"degree": 4, "basis": "blowup"},
//     "components": [{"id": "E1", "class": [0, 1, 0, 0, 0, 0], "coeff": "1/1"}, ...],
//     "points": [
//       {"id": "p", "germ": "ordinary(3)",
//        "incident": [{"component": "E1", "branch": 0}, ...],
//        "intersections": [{"components": ["E1", "L12"], "value": 1}]},
//       {"id": "q", "germ": {"nodes": [
//          {"id": "n1", "parent": null, "proximate_to": [], "mults": {"C": 2}},
//          {"id": "n2", "parent": "n1", "proximate_to": ["n1"], "mults": {"C": 1}}]}}
//     ]
//   }
// Rationals are strings "p/q" (a bare integer is accepted on input).

#include "delpezzo/lct.hpp"
#include "delpezzo/report.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace delpezzo {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message
                                : message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

namespace detail {

/// 1-based line and column of byte offset `byte` (the offset nlohmann reports
/// is one past the offending character).
inline std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  const auto end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] inline void schema_error(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

inline const Json& field(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, "missing field '" + key + "'");
  return *it;
}

inline std::string string_field(const Json& obj, const std::string& key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_string()) schema_error(where + "/" + key, "expected a string");
  return v.get<std::string>();
}

inline std::int64_t integer_value(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) schema_error(where, "expected an integer");
  return v.get<std::int64_t>();
}

inline Rational rational_value(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return make_rational(v.get<std::int64_t>());
  if (!v.is_string()) schema_error(where, "expected a rational string \"p/q\"");
  auto r = parse_rational(v.get<std::string>());
  if (!r) schema_error(where, "malformed rational '" + v.get<std::string>() + "'");
  return *r;
}

inline WeightedCluster parse_explicit_cluster(const Json& germ, const DivisorConfiguration& cfg,
                                              const std::string& where) {
  const auto& nodes_json = field(germ, "nodes", where);
  if (!nodes_json.is_array() || nodes_json.empty()) schema_error(where + "/nodes", "expected a non-empty array");
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < nodes_json.size(); ++i)
    ids.push_back(string_field(nodes_json[i], "id", where + "/nodes/" + std::to_string(i)));
  auto index_of = [&](const std::string& id, const std::string& at) -> std::size_t {
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (ids[i] == id) return i;
    schema_error(at, "unknown node '" + id + "'");
  };

  std::vector<std::string> comps;
  for (const auto& n : nodes_json)
    if (n.contains("mults") && n["mults"].is_object())
      for (const auto& [key, _] : n["mults"].items())
        if (std::find(comps.begin(), comps.end(), key) == comps.end()) comps.push_back(key);
  std::vector<std::string> ordered;
  for (const auto& c : cfg.components)
    if (std::find(comps.begin(), comps.end(), c.id) != comps.end()) ordered.push_back(c.id);
  for (const auto& c : comps)
    if (std::find(ordered.begin(), ordered.end(), c) == ordered.end())
      schema_error(where + "/nodes", "multiplicity given for unknown component '" + c + "'");

  std::vector<ClusterNode> nodes;
  for (std::size_t i = 0; i < nodes_json.size(); ++i) {
    const auto& n = nodes_json[i];
    const auto at = where + "/nodes/" + std::to_string(i);
    ClusterNode node;
    node.id = ids[i];
    if (n.contains("parent") && !n["parent"].is_null()) {
      if (!n["parent"].is_string()) schema_error(at + "/parent", "expected a node id or null");
      node.parent = index_of(n["parent"].get<std::string>(), at + "/parent");
      node.proximate_to.push_back(*node.parent);
    }
    if (n.contains("proximate_to")) {
      if (!n["proximate_to"].is_array()) schema_error(at + "/proximate_to", "expected an array of node ids");
      for (const auto& x : n["proximate_to"]) {
        if (!x.is_string()) schema_error(at + "/proximate_to", "expected node ids");
        const auto q = index_of(x.get<std::string>(), at + "/proximate_to");
        if (std::find(node.proximate_to.begin(), node.proximate_to.end(), q) == node.proximate_to.end())
          node.proximate_to.push_back(q);
      }
    }
    node.mults.assign(ordered.size(), 0);
    if (n.contains("mults")) {
      if (!n["mults"].is_object()) schema_error(at + "/mults", "expected an object component -> multiplicity");
      for (const auto& [key, value] : n["mults"].items()) {
        const auto c = static_cast<std::size_t>(std::find(ordered.begin(), ordered.end(), key) - ordered.begin());
        node.mults[c] = integer_value(value, at + "/mults/" + key);
      }
    }
    nodes.push_back(std::move(node));
  }
  try {
    WeightedCluster cl(ordered, std::move(nodes));
    validate_cluster(cl);
    return cl;
  } catch (const ClusterError& e) {
    schema_error(where, e.what());
  }
}

}  // namespace detail

inline DivisorConfiguration configuration_from_json(const Json& j) {
  using namespace detail;
  const auto& surf = field(j, "surface", "");
  const auto degree = integer_value(field(surf, "degree", "/surface"), "/surface/degree");
  BasisKind kind = BasisKind::blowup;
  if (surf.contains("basis")) {
    const auto b = string_field(surf, "basis", "/surface");
    if (b == "quadric") kind = BasisKind::quadric;
    else if (b != "blowup") schema_error("/surface/basis", "expected \"blowup\" or \"quadric\"");
  }
  DivisorConfiguration cfg{[&] {
                             try {
                               return make_surface(static_cast<int>(degree), kind);
                             } catch (const std::exception& e) {
                               schema_error("/surface", e.what());
                             }
                           }(),
                           {},
                           {}};

  if (j.contains("components")) {
    const auto& comps = j["components"];
    if (!comps.is_array()) schema_error("/components", "expected an array");
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto at = "/components/" + std::to_string(i);
      const auto id = string_field(comps[i], "id", at);
      const auto& cls = field(comps[i], "class", at);
      if (!cls.is_array() || cls.size() != cfg.surface.rank())
        schema_error(at + "/class", "expected " + std::to_string(cfg.surface.rank()) + " integers");
      std::vector<std::int64_t> coeffs;
      for (std::size_t k = 0; k < cls.size(); ++k) coeffs.push_back(integer_value(cls[k], at + "/class/" + std::to_string(k)));
      cfg.components.push_back({id, DivisorClass(cfg.surface, coeffs), rational_value(field(comps[i], "coeff", at), at + "/coeff")});
    }
  }

  if (j.contains("points")) {
    const auto& points = j["points"];
    if (!points.is_array()) schema_error("/points", "expected an array");
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto at = "/points/" + std::to_string(i);
      PointSpec p;
      p.id = string_field(points[i], "id", at);
      const auto& germ = field(points[i], "germ", at);
      if (germ.is_string()) {
        auto g = parse_germ(germ.get<std::string>());
        if (!g) schema_error(at + "/germ", "unknown germ '" + germ.get<std::string>() + "'");
        p.germ = *g;
      } else {
        p.germ = parse_explicit_cluster(germ, cfg, at + "/germ");
      }
      if (points[i].contains("incident")) {
        const auto& inc = points[i]["incident"];
        if (!inc.is_array()) schema_error(at + "/incident", "expected an array");
        for (std::size_t k = 0; k < inc.size(); ++k) {
          const auto ia = at + "/incident/" + std::to_string(k);
          Incidence entry;
          if (inc[k].is_string()) {
            entry.component = inc[k].get<std::string>();
          } else {
            entry.component = string_field(inc[k], "component", ia);
            if (inc[k].contains("branch") && !inc[k]["branch"].is_null()) {
              const auto b = integer_value(inc[k]["branch"], ia + "/branch");
              if (b < 0) schema_error(ia + "/branch", "branch must be non-negative");
              entry.branch = static_cast<std::size_t>(b);
            }
          }
          p.incident.push_back(entry);
        }
      }
      if (points[i].contains("intersections")) {
        const auto& xs = points[i]["intersections"];
        if (!xs.is_array()) schema_error(at + "/intersections", "expected an array");
        for (std::size_t k = 0; k < xs.size(); ++k) {
          const auto ia = at + "/intersections/" + std::to_string(k);
          const auto& pair = field(xs[k], "components", ia);
          if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
            schema_error(ia + "/components", "expected two component ids");
          p.intersections.push_back(
              {pair[0].get<std::string>(), pair[1].get<std::string>(), integer_value(field(xs[k], "value", ia), ia + "/value")});
        }
      }
      cfg.points.push_back(std::move(p));
    }
  }
  return cfg;
}

/// Parses and structurally decodes a configuration. Syntax errors carry the
/// line and column; schema errors carry the JSON pointer of the bad value.
inline DivisorConfiguration parse_configuration(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = detail::locate(text, e.byte);
    std::string what = e.what();
    const auto colon = what.rfind(": ");
    throw ParseError(colon == std::string::npos ? what : what.substr(colon + 2), line, column);
  }
  return configuration_from_json(j);
}

inline DivisorConfiguration load_configuration(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_configuration(buf.str());
}

inline Json class_to_json(const DivisorClass& c) { return Json(c.coeffs()); }

inline Json configuration_to_json(const DivisorConfiguration& cfg) {
  Json j;
  j["surface"] = {{"degree", cfg.surface.degree()}, {"basis", to_string(cfg.surface.basis_kind())}};
  j["components"] = Json::array();
  for (const auto& c : cfg.components)
    j["components"].push_back({{"id", c.id}, {"class", class_to_json(c.cls)}, {"coeff", to_string(c.coeff)}});
  j["points"] = Json::array();
  for (const auto& p : cfg.points) {
    Json pj;
    pj["id"] = p.id;
    if (const auto* g = std::get_if<Germ>(&p.germ)) {
      pj["germ"] = to_string(*g);
      pj["incident"] = Json::array();
      for (const auto& inc : p.incident) {
        Json ij{{"component", inc.component}};
        if (inc.branch) ij["branch"] = *inc.branch;
        pj["incident"].push_back(ij);
      }
    } else {
      const auto& cl = std::get<WeightedCluster>(p.germ);
      Json nodes = Json::array();
      for (const auto& n : cl.nodes()) {
        Json nj;
        nj["id"] = n.id;
        nj["parent"] = n.parent ? Json(cl.node(*n.parent).id) : Json(nullptr);
        nj["proximate_to"] = Json::array();
        for (auto q : n.proximate_to) nj["proximate_to"].push_back(cl.node(q).id);
        nj["mults"] = Json::object();
        for (std::size_t c = 0; c < cl.components().size(); ++c)
          if (n.mults[c]) nj["mults"][cl.components()[c]] = n.mults[c];
        nodes.push_back(nj);
      }
      pj["germ"] = {{"nodes", nodes}};
    }
    if (!p.intersections.empty()) {
      pj["intersections"] = Json::array();
      for (const auto& d : p.intersections)
        pj["intersections"].push_back({{"components", {d.first, d.second}}, {"value", d.value}});
    }
    j["points"].push_back(pj);
  }
  return j;
}

// ---------------------------------------------------------------------------
// Certificates

inline Json threshold_to_json(const Threshold& t) { return to_string(t); }

inline Threshold threshold_from_json(const Json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "inf") return Threshold::infinite();
  return Threshold{detail::rational_value(j, where)};
}

inline Json certificate_to_json(const LctCertificate& c) {
  Json j;
  j["lct"] = threshold_to_json(c.lct);
  j["minimizer"] = {{"kind", to_string(c.minimizer.kind)}, {"point", c.minimizer.point}, {"id", c.minimizer.id}};
  j["coefficients"] = Json::array();
  for (const auto& row : c.coefficients)
    j["coefficients"].push_back(
        {{"component", row.component}, {"coeff", to_string(row.coeff)}, {"ratio", threshold_to_json(row.ratio)}});
  j["rows"] = Json::array();
  for (const auto& row : c.rows)
    j["rows"].push_back({{"point", row.point},
                         {"node", row.node},
                         {"k", row.k},
                         {"v", to_string(row.v)},
                         {"ratio", threshold_to_json(row.ratio)}});
  return j;
}

inline LctCertificate certificate_from_json(const Json& j) {
  using namespace detail;
  LctCertificate c;
  c.lct = threshold_from_json(field(j, "lct", ""), "/lct");
  const auto& m = field(j, "minimizer", "");
  const auto kind = string_field(m, "kind", "/minimizer");
  if (kind == "component") c.minimizer.kind = Minimizer::Kind::component;
  else if (kind == "node") c.minimizer.kind = Minimizer::Kind::node;
  else if (kind != "none") schema_error("/minimizer/kind", "unknown kind '" + kind + "'");
  c.minimizer.point = string_field(m, "point", "/minimizer");
  c.minimizer.id = string_field(m, "id", "/minimizer");
  const auto& coeffs = field(j, "coefficients", "");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto at = "/coefficients/" + std::to_string(i);
    c.coefficients.push_back({string_field(coeffs[i], "component", at),
                              rational_value(field(coeffs[i], "coeff", at), at + "/coeff"),
                              threshold_from_json(field(coeffs[i], "ratio", at), at + "/ratio")});
  }
  const auto& rows = field(j, "rows", "");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto at = "/rows/" + std::to_string(i);
    c.rows.push_back({string_field(rows[i], "point", at), string_field(rows[i], "node", at),
                      integer_value(field(rows[i], "k", at), at + "/k"),
                      rational_value(field(rows[i], "v", at), at + "/v"),
                      threshold_from_json(field(rows[i], "ratio", at), at + "/ratio")});
  }
  return c;
}

inline Json report_to_json(const Report& r) {
  Json j;
  j["suite"] = r.suite;
  j["passed"] = r.pass_count();
  j["total"] = r.checks.size();
  j["checks"] = Json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"id", c.id}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
  return j;
}

}  // namespace delpezzo
