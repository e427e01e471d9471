#pragma once

// Weighted clusters of infinitely near points.
//
// A cluster is the combinatorial record of an embedded resolution of a curve
// germ at a point p: a rooted tree of points (the root is p, children lie in
// the first neighbourhood of their parent) plus the proximity relation and
// the multiplicity of each component's strict transform at each point.
//
// Conventions:
//  * Nodes are stored so that every ancestor precedes its descendants.
//  * proximate_to lists the parent first; a satellite node has one more entry,
//    an older node whose exceptional curve also passes through it.
//  * Intersections of strict transforms with an exceptional curve that are not
//    listed as nodes are transverse and at pairwise distinct points. Under this
//    convention any cluster satisfying the proximity inequalities is already a
//    log resolution once all of its nodes are blown up.

#include "delpezzo/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace delpezzo {

class ClusterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ClusterNode {
  std::string id;
  std::optional<std::size_t> parent;
  std::vector<std::size_t> proximate_to;
  std::vector<std::int64_t> mults;  // aligned with WeightedCluster::components

  bool is_satellite() const { return proximate_to.size() == 2; }
};

class WeightedCluster {
 public:
  WeightedCluster() = default;
  WeightedCluster(std::vector<std::string> components, std::vector<ClusterNode> nodes)
      : components_(std::move(components)), nodes_(std::move(nodes)) {}

  const std::vector<std::string>& components() const { return components_; }
  const std::vector<ClusterNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  const ClusterNode& node(std::size_t i) const { return nodes_.at(i); }

  std::optional<std::size_t> find_node(const std::string& id) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].id == id) return i;
    return std::nullopt;
  }
  std::optional<std::size_t> find_component(const std::string& id) const {
    auto it = std::find(components_.begin(), components_.end(), id);
    if (it == components_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - components_.begin());
  }
  std::size_t node_index(const std::string& id) const {
    if (auto i = find_node(id)) return *i;
    throw ClusterError("unknown cluster node '" + id + "'");
  }
  std::size_t component_index(const std::string& id) const {
    if (auto i = find_component(id)) return *i;
    throw ClusterError("component '" + id + "' is not in this cluster");
  }

  std::int64_t mult(std::size_t node, std::size_t component) const {
    return nodes_.at(node).mults.at(component);
  }

  std::vector<std::size_t> children(std::size_t node) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].parent == node) out.push_back(i);
    return out;
  }

  /// Nodes proximate to `node` (lying on its exceptional curve).
  std::vector<std::size_t> proximate_points(std::size_t node) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      for (auto q : nodes_[i].proximate_to)
        if (q == node) out.push_back(i);
    return out;
  }

  /// mult at `node` minus the multiplicities at the points proximate to it:
  /// the number of unlisted transverse crossings of the exceptional curve.
  std::int64_t excess(std::size_t node, std::size_t component) const {
    std::int64_t e = mult(node, component);
    for (auto q : proximate_points(node)) e -= mult(q, component);
    return e;
  }

  friend bool operator==(const WeightedCluster&, const WeightedCluster&) = default;

 private:
  std::vector<std::string> components_;
  std::vector<ClusterNode> nodes_;
};

/// Structural checks plus the proximity inequality
///   mult_q(C) >= sum of mult_{q'}(C) over q' proximate to q.
/// Throws ClusterError describing the first violation.
inline void validate_cluster(const WeightedCluster& cl) {
  const auto& nodes = cl.nodes();
  const auto nc = cl.components().size();
  if (nodes.empty()) throw ClusterError("cluster has no nodes");
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = i + 1; j < nc; ++j)
      if (cl.components()[i] == cl.components()[j])
        throw ClusterError("duplicate component '" + cl.components()[i] + "' in cluster");

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    for (std::size_t j = 0; j < i; ++j)
      if (nodes[j].id == n.id) throw ClusterError("duplicate node id '" + n.id + "'");
    if (n.mults.size() != nc)
      throw ClusterError("node '" + n.id + "' has " + std::to_string(n.mults.size()) +
                         " multiplicities for " + std::to_string(nc) + " components");
    for (std::size_t c = 0; c < nc; ++c)
      if (n.mults[c] < 0)
        throw ClusterError("negative multiplicity of '" + cl.components()[c] + "' at '" + n.id + "'");

    if (i == 0) {
      if (n.parent || !n.proximate_to.empty())
        throw ClusterError("root node '" + n.id + "' must have no parent or proximities");
      continue;
    }
    if (!n.parent) throw ClusterError("node '" + n.id + "' is a second root");
    if (*n.parent >= i)
      throw ClusterError("node '" + n.id + "' precedes its parent");
    if (n.proximate_to.empty() || n.proximate_to.front() != *n.parent)
      throw ClusterError("node '" + n.id + "' must be proximate to its parent first");
    if (n.proximate_to.size() > 2)
      throw ClusterError("node '" + n.id + "' is proximate to more than two points");
    if (n.proximate_to.size() == 2) {
      // A satellite lies where E_parent meets the strict transform of an
      // exceptional curve through the parent.
      const auto other = n.proximate_to[1];
      const auto& via = nodes[*n.parent].proximate_to;
      if (std::find(via.begin(), via.end(), other) == via.end())
        throw ClusterError("satellite '" + n.id + "' is proximate to '" + nodes[other].id +
                           "', whose exceptional curve does not pass through its parent");
      for (std::size_t j = 1; j < i; ++j)
        if (nodes[j].parent == n.parent && nodes[j].proximate_to.size() == 2 &&
            nodes[j].proximate_to[1] == other)
          throw ClusterError("satellites '" + nodes[j].id + "' and '" + n.id +
                             "' occupy the same point");
    }
  }

  for (std::size_t c = 0; c < nc; ++c) {
    if (nodes[0].mults[c] < 1)
      throw ClusterError("component '" + cl.components()[c] + "' does not pass through the root");
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (cl.excess(i, c) < 0)
        throw ClusterError("proximity inequality fails for '" + cl.components()[c] + "' at '" +
                           nodes[i].id + "'");
  }
}

/// v_q(C) = mult_q(C) + sum of v_{q'}(C) over the points q' that q is
/// proximate to. Returns the value for every node.
inline std::vector<std::int64_t> valuations(const WeightedCluster& cl, std::size_t component) {
  std::vector<std::int64_t> v(cl.size(), 0);
  for (std::size_t i = 0; i < cl.size(); ++i) {
    v[i] = cl.mult(i, component);
    for (auto q : cl.node(i).proximate_to) v[i] += v[q];
  }
  return v;
}

/// k_q = 1 + sum of k_{q'} over the points q is proximate to (k_root = 1).
/// These are the discrepancies of the exceptional curves over a smooth surface.
inline std::vector<std::int64_t> discrepancies(const WeightedCluster& cl) {
  std::vector<std::int64_t> k(cl.size(), 0);
  for (std::size_t i = 0; i < cl.size(); ++i) {
    k[i] = 1;
    for (auto q : cl.node(i).proximate_to) k[i] += k[q];
  }
  return k;
}

inline std::int64_t valuation(const WeightedCluster& cl, const std::string& node,
                              const std::string& component) {
  return valuations(cl, cl.component_index(component))[cl.node_index(node)];
}

/// k_E + 1 for the exceptional curve of `node`.
inline std::int64_t log_discrepancy(const WeightedCluster& cl, const std::string& node) {
  return discrepancies(cl)[cl.node_index(node)] + 1;
}

/// v_q(D) = sum_i d_i v_q(C_i) for a weighting aligned with cl.components().
inline std::vector<Rational> weighted_valuations(const WeightedCluster& cl,
                                                 const std::vector<Rational>& weights) {
  std::vector<Rational> total(cl.size(), Rational(0));
  for (std::size_t c = 0; c < cl.components().size(); ++c) {
    if (weights.at(c) == 0) continue;
    const auto v = valuations(cl, c);
    for (std::size_t i = 0; i < cl.size(); ++i) total[i] += weights[c] * v[i];
  }
  return total;
}

/// Noether's formula: sum over common nodes of mult_q(C_i) mult_q(C_j).
inline std::int64_t noether_intersection(const WeightedCluster& cl, std::size_t a, std::size_t b) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < cl.size(); ++i) total += cl.mult(i, a) * cl.mult(i, b);
  return total;
}

/// Keeps only the listed components (by index, in the given order).
inline WeightedCluster restrict_components(const WeightedCluster& cl,
                                           const std::vector<std::size_t>& keep) {
  std::vector<std::string> comps;
  for (auto c : keep) comps.push_back(cl.components().at(c));
  std::vector<ClusterNode> nodes = cl.nodes();
  for (auto& n : nodes) {
    std::vector<std::int64_t> m;
    for (auto c : keep) m.push_back(n.mults.at(c));
    n.mults = std::move(m);
  }
  return WeightedCluster(std::move(comps), std::move(nodes));
}

/// Re-lists the nodes in `order` (a permutation in which parents still come
/// first). Blow-ups of distinct points commute, so the result describes the
/// same resolution.
inline WeightedCluster reorder_nodes(const WeightedCluster& cl, const std::vector<std::size_t>& order) {
  if (order.size() != cl.size()) throw ClusterError("reordering must be a permutation");
  std::vector<std::size_t> position(cl.size(), cl.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= cl.size() || position[order[i]] != cl.size())
      throw ClusterError("reordering must be a permutation");
    position[order[i]] = i;
  }
  std::vector<ClusterNode> nodes;
  for (auto old : order) {
    auto n = cl.node(old);
    if (n.parent) n.parent = position[*n.parent];
    for (auto& q : n.proximate_to) q = position[q];
    nodes.push_back(std::move(n));
  }
  WeightedCluster out(cl.components(), std::move(nodes));
  validate_cluster(out);
  return out;
}

// ---------------------------------------------------------------------------
// Germ templates

enum class GermKind { smooth_transverse, tacnode, node, cusp, tacnode_curve, ordinary };

struct Germ {
  GermKind kind = GermKind::smooth_transverse;
  int branches = 1;  // k for smooth_transverse(k), m for ordinary(m)

  friend bool operator==(const Germ&, const Germ&) = default;
};

inline std::string to_string(const Germ& g) {
  switch (g.kind) {
    case GermKind::smooth_transverse: return "smooth_transverse(" + std::to_string(g.branches) + ")";
    case GermKind::ordinary: return "ordinary(" + std::to_string(g.branches) + ")";
    case GermKind::tacnode: return "tacnode";
    case GermKind::node: return "node";
    case GermKind::cusp: return "cusp";
    case GermKind::tacnode_curve: return "tacnode_curve";
  }
  return "?";
}

/// Parses "node", "cusp", "tacnode", "tacnode_curve", "A1", "A2", "A3",
/// "smooth_transverse(k)", "ordinary(m)".
inline std::optional<Germ> parse_germ(const std::string& text) {
  if (text == "node" || text == "A1") return Germ{GermKind::node, 2};
  if (text == "cusp" || text == "A2") return Germ{GermKind::cusp, 1};
  if (text == "tacnode") return Germ{GermKind::tacnode, 2};
  if (text == "tacnode_curve" || text == "A3") return Germ{GermKind::tacnode_curve, 2};
  for (auto [prefix, kind] : {std::pair{std::string("smooth_transverse("), GermKind::smooth_transverse},
                              std::pair{std::string("ordinary("), GermKind::ordinary}}) {
    if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size() + 1 && text.back() == ')') {
      const auto digits = text.substr(prefix.size(), text.size() - prefix.size() - 1);
      if (digits.empty() || digits.size() > 3 ||
          !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        return std::nullopt;
      const int k = std::stoi(digits);
      if (k < 1) return std::nullopt;
      return Germ{kind, k};
    }
  }
  return std::nullopt;
}

/// Number of branch slots a germ exposes to the incidence list.
inline std::size_t slot_count(const Germ& g) {
  switch (g.kind) {
    case GermKind::smooth_transverse:
    case GermKind::ordinary: return static_cast<std::size_t>(g.branches);
    case GermKind::cusp: return 1;
    default: return 2;
  }
}

/// Branch-level template: the minimal embedded resolution of the germ.
struct GermTemplate {
  std::vector<std::optional<std::size_t>> parent;
  std::vector<std::vector<std::size_t>> proximate_to;
  std::vector<std::vector<std::int64_t>> slot_mults;  // [slot][node]
};

inline GermTemplate germ_template(const Germ& g) {
  GermTemplate t;
  const auto slots = slot_count(g);
  switch (g.kind) {
    case GermKind::smooth_transverse:
    case GermKind::ordinary:
    case GermKind::node:
      // Pairwise transverse smooth branches: one blow-up separates them.
      t.parent = {std::nullopt};
      t.proximate_to = {{}};
      t.slot_mults.assign(slots, {1});
      break;
    case GermKind::tacnode:
    case GermKind::tacnode_curve:
      // Two smooth branches with contact order 2 (y = 0, y = x^2 or y^2 = x^4).
      t.parent = {std::nullopt, 0};
      t.proximate_to = {{}, {0}};
      t.slot_mults.assign(slots, {1, 1});
      break;
    case GermKind::cusp:
      // y^2 = x^3: double root, a free point, then a satellite on E_1 and E_2.
      t.parent = {std::nullopt, 0, 1};
      t.proximate_to = {{}, {0}, {1, 0}};
      t.slot_mults = {{2, 1, 1}};
      break;
  }
  return t;
}

/// Builds the cluster of a germ whose slot s is a branch of component
/// slot_component[s] (indices into `components`). Multiplicities of a
/// component add over its branches.
inline WeightedCluster instantiate_germ(const Germ& g, const std::vector<std::string>& components,
                                        const std::vector<std::size_t>& slot_component) {
  const auto t = germ_template(g);
  if (slot_component.size() != t.slot_mults.size())
    throw ClusterError("germ " + to_string(g) + " has " + std::to_string(t.slot_mults.size()) +
                       " branch slots, " + std::to_string(slot_component.size()) + " assigned");
  std::vector<ClusterNode> nodes(t.parent.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    nodes[i].id = "n" + std::to_string(i + 1);
    nodes[i].parent = t.parent[i];
    nodes[i].proximate_to = t.proximate_to[i];
    nodes[i].mults.assign(components.size(), 0);
  }
  for (std::size_t s = 0; s < slot_component.size(); ++s)
    for (std::size_t i = 0; i < nodes.size(); ++i)
      nodes[i].mults.at(slot_component[s]) += t.slot_mults[s][i];
  WeightedCluster cl(components, std::move(nodes));
  validate_cluster(cl);
  return cl;
}

}  // namespace delpezzo
