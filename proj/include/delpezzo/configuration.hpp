#pragma once

// Divisor configurations: a Q-divisor D = sum d_i C_i on a surface together
// with the local germ data of D at finitely many marked points.

#include "delpezzo/cluster.hpp"
#include "delpezzo/lattice.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace delpezzo {

class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Local or global intersection data that cannot be realised.
class InconsistentIntersectionError : public std::runtime_error {
 public:
  InconsistentIntersectionError(std::string first, std::string second, std::string message)
      : std::runtime_error(std::move(message)), first_(std::move(first)), second_(std::move(second)) {}
  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }

 private:
  std::string first_, second_;
};

struct Component {
  std::string id;
  DivisorClass cls;
  Rational coeff;
};

struct Incidence {
  std::string component;
  std::optional<std::size_t> branch;  // a single slot; absent means all remaining slots
};

struct DeclaredIntersection {
  std::string first;
  std::string second;
  std::int64_t value = 0;
};

struct PointSpec {
  std::string id;
  std::variant<Germ, WeightedCluster> germ;
  std::vector<Incidence> incident;  // ignored for explicit clusters
  std::vector<DeclaredIntersection> intersections;
};

struct DivisorConfiguration {
  SurfaceModel surface;
  std::vector<Component> components;
  std::vector<PointSpec> points;

  std::optional<std::size_t> find_component(const std::string& id) const {
    for (std::size_t i = 0; i < components.size(); ++i)
      if (components[i].id == id) return i;
    return std::nullopt;
  }
  std::size_t component_index(const std::string& id) const {
    if (auto i = find_component(id)) return *i;
    throw ConfigurationError("unknown component '" + id + "'");
  }
  const PointSpec& point(const std::string& id) const {
    for (const auto& p : points)
      if (p.id == id) return p;
    throw ConfigurationError("unknown point '" + id + "'");
  }
  std::vector<Rational> coefficients() const {
    std::vector<Rational> out;
    for (const auto& c : components) out.push_back(c.coeff);
    return out;
  }
};

namespace detail {

inline WeightedCluster compile_template(const DivisorConfiguration& cfg, const PointSpec& p,
                                        const Germ& g) {
  const auto slots = slot_count(g);
  std::vector<std::optional<std::string>> owner(slots);
  std::vector<std::string> greedy;
  for (const auto& inc : p.incident) {
    cfg.component_index(inc.component);
    if (inc.branch) {
      if (*inc.branch >= slots)
        throw ConfigurationError("point '" + p.id + "': branch " + std::to_string(*inc.branch) +
                                 " out of range for " + to_string(g));
      if (owner[*inc.branch])
        throw ConfigurationError("point '" + p.id + "': branch " + std::to_string(*inc.branch) +
                                 " assigned twice");
      owner[*inc.branch] = inc.component;
    } else {
      greedy.push_back(inc.component);
    }
  }
  // Components without an explicit branch take the free slots: one each, the
  // last one takes whatever remains.
  std::size_t next = 0;
  for (std::size_t gi = 0; gi < greedy.size(); ++gi) {
    while (next < slots && owner[next]) ++next;
    if (next == slots)
      throw ConfigurationError("point '" + p.id + "': no free branch of " + to_string(g) + " for '" +
                               greedy[gi] + "'");
    owner[next] = greedy[gi];
    if (gi + 1 == greedy.size())
      for (auto& o : owner)
        if (!o) o = greedy[gi];
  }
  for (std::size_t s = 0; s < slots; ++s)
    if (!owner[s])
      throw ConfigurationError("point '" + p.id + "': branch " + std::to_string(s) + " of " +
                               to_string(g) + " is not assigned to a component");

  std::vector<std::string> comps;
  for (const auto& c : cfg.components)
    if (std::find(owner.begin(), owner.end(), std::optional<std::string>(c.id)) != owner.end())
      comps.push_back(c.id);
  std::vector<std::size_t> slot_component;
  for (const auto& o : owner)
    slot_component.push_back(static_cast<std::size_t>(
        std::find(comps.begin(), comps.end(), *o) - comps.begin()));
  return instantiate_germ(g, comps, slot_component);
}

}  // namespace detail

/// The cluster of D at p, with components in configuration order. Checks the
/// proximity inequality and any declared local intersection numbers.
inline WeightedCluster compile_configuration(const DivisorConfiguration& cfg, const std::string& p) {
  const auto& spec = cfg.point(p);
  WeightedCluster cl;
  if (const auto* g = std::get_if<Germ>(&spec.germ)) {
    cl = detail::compile_template(cfg, spec, *g);
  } else {
    const auto& given = std::get<WeightedCluster>(spec.germ);
    validate_cluster(given);
    std::vector<std::size_t> order;
    for (const auto& c : cfg.components)
      if (auto i = given.find_component(c.id)) order.push_back(*i);
    for (const auto& id : given.components())
      cfg.component_index(id);
    cl = restrict_components(given, order);
  }
  for (const auto& d : spec.intersections) {
    const auto a = cl.find_component(d.first), b = cl.find_component(d.second);
    if (!a || !b)
      throw ConfigurationError("point '" + p + "': declared intersection names a component not through it");
    const auto local = noether_intersection(cl, *a, *b);
    if (local != d.value)
      throw InconsistentIntersectionError(
          d.first, d.second,
          "point '" + p + "': declared (" + d.first + "." + d.second + ") = " + std::to_string(d.value) +
              " but the germ gives " + std::to_string(local));
  }
  return cl;
}

/// Components passing through p, as configuration indices.
inline std::vector<std::size_t> components_at(const DivisorConfiguration& cfg, const std::string& p) {
  const auto cl = compile_configuration(cfg, p);
  std::vector<std::size_t> out;
  for (const auto& id : cl.components()) out.push_back(cfg.component_index(id));
  return out;
}

/// Coefficients aligned with cl.components().
inline std::vector<Rational> cluster_weights(const DivisorConfiguration& cfg, const WeightedCluster& cl) {
  std::vector<Rational> w;
  for (const auto& id : cl.components()) w.push_back(cfg.components[cfg.component_index(id)].coeff);
  return w;
}

/// mult_p(D) = sum_i d_i mult_p(C_i).
inline Rational multiplicity_at(const DivisorConfiguration& cfg, const std::string& p) {
  const auto cl = compile_configuration(cfg, p);
  const auto w = cluster_weights(cfg, cl);
  Rational total = 0;
  for (std::size_t c = 0; c < w.size(); ++c) total += w[c] * cl.mult(0, c);
  return total;
}

/// (C_i . C_j)_p by Noether's formula over the cluster at p.
inline std::int64_t local_intersection(const DivisorConfiguration& cfg, const std::string& p,
                                       const std::string& i, const std::string& j) {
  const auto cl = compile_configuration(cfg, p);
  const auto a = cl.find_component(i), b = cl.find_component(j);
  if (!a) throw ConfigurationError("component '" + i + "' does not pass through '" + p + "'");
  if (!b) throw ConfigurationError("component '" + j + "' does not pass through '" + p + "'");
  return noether_intersection(cl, *a, *b);
}

/// Structural validation plus the global check that local intersections of
/// distinct classes never exceed their intersection number on the surface.
/// `require_positive` rejects non-positive coefficients (user input).
inline void validate_configuration(const DivisorConfiguration& cfg, bool require_positive = true) {
  std::set<std::string> ids;
  for (const auto& c : cfg.components) {
    if (c.id.empty()) throw ConfigurationError("component with empty id");
    if (!ids.insert(c.id).second) throw ConfigurationError("duplicate component id '" + c.id + "'");
    if (!(c.cls.surface() == cfg.surface))
      throw ConfigurationError("component '" + c.id + "' lives on another surface");
    if (require_positive && c.coeff <= 0)
      throw ConfigurationError("component '" + c.id + "' has non-positive coefficient " + to_string(c.coeff));
  }
  std::set<std::string> pids;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> total;
  for (const auto& p : cfg.points) {
    if (p.id.empty()) throw ConfigurationError("point with empty id");
    if (!pids.insert(p.id).second) throw ConfigurationError("duplicate point id '" + p.id + "'");
    const auto cl = compile_configuration(cfg, p.id);
    for (std::size_t a = 0; a < cl.components().size(); ++a)
      for (std::size_t b = a + 1; b < cl.components().size(); ++b) {
        const auto i = cfg.component_index(cl.components()[a]);
        const auto j = cfg.component_index(cl.components()[b]);
        total[{std::min(i, j), std::max(i, j)}] += noether_intersection(cl, a, b);
      }
  }
  for (const auto& [key, local] : total) {
    const auto& ci = cfg.components[key.first];
    const auto& cj = cfg.components[key.second];
    if (ci.cls == cj.cls) continue;
    const auto global = intersect(ci.cls, cj.cls);
    if (local > global)
      throw InconsistentIntersectionError(
          ci.id, cj.id,
          "components '" + ci.id + "' and '" + cj.id + "' meet " + std::to_string(local) +
              " times at marked points but " + to_string(ci.cls) + "." + to_string(cj.cls) + " = " +
              std::to_string(global));
  }
}

/// Sum of d_i [C_i] as a rational vector in the lattice basis.
inline std::vector<Rational> total_class(const DivisorConfiguration& cfg) {
  std::vector<Rational> total(cfg.surface.rank(), Rational(0));
  for (const auto& c : cfg.components)
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += c.coeff * c.cls[k];
  return total;
}

inline bool is_anticanonical(const DivisorConfiguration& cfg) {
  const auto total = total_class(cfg);
  const auto& k = cfg.surface.canonical_coeffs();
  for (std::size_t i = 0; i < total.size(); ++i)
    if (total[i] != -k[i]) return false;
  return true;
}

inline DivisorConfiguration scaled(DivisorConfiguration cfg, const Rational& lambda) {
  for (auto& c : cfg.components) c.coeff *= lambda;
  return cfg;
}

}  // namespace delpezzo
