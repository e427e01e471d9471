#pragma once

// Anticanonical Q-divisors realising the global log canonical threshold of
// each class of del Pezzo surface (the upper-bound side of glct).

#include "delpezzo/lct.hpp"
#include "delpezzo/named.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace delpezzo {

enum class Scenario {
  deg1_no_cuspidal,
  deg1_cuspidal,
  deg2_no_tacnodal,
  deg2_tacnodal,
  deg3_no_eckardt,
  deg3_eckardt,
  deg4,
  deg5,
  deg6,
  deg8_quadric,
  deg7,
  deg9,
  deg8_F1,
};

struct GlctScenario {
  Scenario id;
  std::string name;
  int degree;
  Rational omega;
  std::size_t row;  // row of the glct table, 1-based
  std::string condition;
};

inline std::vector<GlctScenario> scenario_catalog() {
  auto q = [](std::int64_t p, std::int64_t d) { return make_rational(p, d); };
  return {
      {Scenario::deg1_no_cuspidal, "deg1_no_cuspidal", 1, q(1, 1), 1, "K^2 = 1, no cuspidal curve in |-K|"},
      {Scenario::deg1_cuspidal, "deg1_cuspidal", 1, q(5, 6), 2, "K^2 = 1, some cuspidal curve in |-K|"},
      {Scenario::deg2_no_tacnodal, "deg2_no_tacnodal", 2, q(5, 6), 3, "K^2 = 2, no tacnodal curve in |-K|"},
      {Scenario::deg2_tacnodal, "deg2_tacnodal", 2, q(3, 4), 4, "K^2 = 2, some tacnodal curve in |-K|"},
      {Scenario::deg3_no_eckardt, "deg3_no_eckardt", 3, q(3, 4), 5, "K^2 = 3, no Eckardt point"},
      {Scenario::deg3_eckardt, "deg3_eckardt", 3, q(2, 3), 6, "K^2 = 3, some Eckardt point"},
      {Scenario::deg4, "deg4", 4, q(2, 3), 7, "K^2 = 4"},
      {Scenario::deg5, "deg5", 5, q(1, 2), 8, "K^2 = 5"},
      {Scenario::deg6, "deg6", 6, q(1, 2), 8, "K^2 = 6"},
      {Scenario::deg8_quadric, "deg8_quadric", 8, q(1, 2), 8, "P^1 x P^1"},
      {Scenario::deg7, "deg7", 7, q(1, 3), 9, "K^2 = 7"},
      {Scenario::deg9, "deg9", 9, q(1, 3), 9, "P^2"},
      {Scenario::deg8_F1, "deg8_F1", 8, q(1, 3), 9, "F_1"},
  };
}

inline const GlctScenario& scenario_info(Scenario id) {
  static const auto catalog = scenario_catalog();
  for (const auto& s : catalog)
    if (s.id == id) return s;
  throw std::invalid_argument("scenario not in catalog");
}

inline std::optional<Scenario> parse_scenario(const std::string& name) {
  for (const auto& s : scenario_catalog())
    if (s.name == name) return s.id;
  return std::nullopt;
}

struct WitnessRecord {
  GlctScenario scenario;
  DivisorConfiguration config;
  std::vector<std::string> roles;  // one per component
};

namespace detail {

inline DivisorClass vec(const SurfaceModel& s, std::vector<std::int64_t> c) { return DivisorClass(s, std::move(c)); }

/// Marks every pairwise meeting point of the listed components as a
/// transverse crossing, one point per unit of intersection.
inline void mark_crossings(DivisorConfiguration& cfg) {
  const auto n = cfg.components.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto times = intersect(cfg.components[i].cls, cfg.components[j].cls);
      for (std::int64_t t = 0; t < times; ++t) {
        const auto id = cfg.components[i].id + "x" + cfg.components[j].id + (times > 1 ? "#" + std::to_string(t + 1) : "");
        cfg.points.push_back({id, Germ{GermKind::smooth_transverse, 2},
                              {{cfg.components[i].id, 0}, {cfg.components[j].id, 1}}, {}});
      }
    }
}

}  // namespace detail

inline WitnessRecord witness(Scenario id) {
  const auto& info = scenario_info(id);
  WitnessRecord w{info, DivisorConfiguration{make_surface(info.degree, id == Scenario::deg8_quadric
                                                                           ? BasisKind::quadric
                                                                           : BasisKind::blowup),
                                             {}, {}},
                  {}};
  auto& cfg = w.config;
  const auto& s = cfg.surface;
  auto add = [&](std::string cid, DivisorClass cls, Rational coeff, std::string role) {
    cfg.components.push_back({std::move(cid), std::move(cls), std::move(coeff)});
    w.roles.push_back(std::move(role));
  };
  auto singular_anticanonical = [&](const std::string& germ, const std::string& role) {
    add("C", anticanonical_class(s), 1, role);
    cfg.points.push_back({"p", *parse_germ(germ), {{"C", std::nullopt}}, {}});
  };

  switch (id) {
    case Scenario::deg1_no_cuspidal:
      singular_anticanonical("node", "nodal curve in |-K|");
      break;
    case Scenario::deg1_cuspidal:
      singular_anticanonical("cusp", "cuspidal curve in |-K|");
      break;
    case Scenario::deg2_no_tacnodal:
      singular_anticanonical("cusp", "cuspidal curve in |-K|");
      break;
    case Scenario::deg2_tacnodal:
      singular_anticanonical("tacnode_curve", "tacnodal curve in |-K|");
      break;
    case Scenario::deg3_no_eckardt: {
      // A tangent hyperplane section splitting as a line and a conic tangent to it.
      const auto e1 = exceptional(s, 1);
      add("E1", e1, 1, "line");
      add("Z", anticanonical_class(s) - e1, 1, "conic residual to the line, tangent at p");
      cfg.points.push_back({"p", Germ{GermKind::tacnode, 2}, {{"E1", 0}, {"Z", 1}}, {}});
      break;
    }
    case Scenario::deg3_eckardt:
      // Three coplanar lines through a common point.
      add("E1", exceptional(s, 1), 1, "line");
      add("L12", detail::vec(s, {1, -1, -1, 0, 0, 0, 0}), 1, "line");
      add("M", detail::vec(s, {2, -1, 0, -1, -1, -1, -1}), 1, "line");
      cfg.points.push_back({"p", Germ{GermKind::ordinary, 3}, {{"E1", 0}, {"L12", 1}, {"M", 2}}, {}});
      break;
    case Scenario::deg4: {
      const Degree4Classes d;
      add("E1", d.E(1), 1, "line");
      add("L12", d.L(1, 2), 1, "line");
      add("A2", d.A(2), 1, "conic through p");
      cfg.points.push_back({"p", Germ{GermKind::ordinary, 3}, {{"E1", 0}, {"L12", 1}, {"A2", 2}}, {}});
      break;
    }
    case Scenario::deg5:
      add("L12", detail::vec(s, {1, -1, -1, 0, 0}), 2, "double line");
      add("E1", exceptional(s, 1), 1, "line");
      add("E2", exceptional(s, 2), 1, "line");
      add("L34", detail::vec(s, {1, 0, 0, -1, -1}), 1, "line");
      detail::mark_crossings(cfg);
      break;
    case Scenario::deg6:
      add("L12", detail::vec(s, {1, -1, -1, 0}), 2, "double line");
      add("E1", exceptional(s, 1), 1, "line");
      add("E2", exceptional(s, 2), 1, "line");
      add("B3", detail::vec(s, {1, 0, 0, -1}), 1, "conic");
      detail::mark_crossings(cfg);
      break;
    case Scenario::deg7:
      add("L12", detail::vec(s, {1, -1, -1}), 3, "triple line");
      add("E1", exceptional(s, 1), 2, "double line");
      add("E2", exceptional(s, 2), 2, "double line");
      detail::mark_crossings(cfg);
      break;
    case Scenario::deg8_F1:
      add("F", detail::vec(s, {1, -1}), 3, "fibre, tripled");
      add("E1", exceptional(s, 1), 2, "negative section, doubled");
      detail::mark_crossings(cfg);
      break;
    case Scenario::deg8_quadric:
      add("F1", detail::vec(s, {1, 0}), 2, "ruling, doubled");
      add("F2", detail::vec(s, {0, 1}), 2, "ruling, doubled");
      detail::mark_crossings(cfg);
      break;
    case Scenario::deg9:
      add("L", hyperplane(s), 3, "line, tripled");
      break;
  }
  return w;
}

}  // namespace delpezzo
