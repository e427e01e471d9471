#pragma once

// Seeded generators for random clusters and local configurations.
// std::mt19937_64 is fully specified by the standard and draws are reduced by
// plain modulo, so a seed yields the same instances on every platform.

#include "delpezzo/configuration.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace delpezzo {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  bool chance(std::int64_t num, std::int64_t den) { return uniform(1, den) <= num; }

  /// A rational num/den with num in [lo, hi] and den in [1, max_den].
  Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
    return make_rational(uniform(lo, hi), uniform(1, max_den));
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v.at(static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(v.size()) - 1)));
  }

 private:
  std::mt19937_64 engine_;
};

struct ClusterShape {
  std::size_t max_nodes = 7;
  std::int64_t max_extra = 2;  // multiplicity added on top of the proximity bound
};

/// A random tree of infinitely near points with free and satellite nodes.
/// Multiplicities are left empty.
inline std::vector<ClusterNode> random_tree(Rng& rng, std::size_t node_count) {
  std::vector<ClusterNode> nodes(1);
  nodes[0].id = "n1";
  while (nodes.size() < node_count) {
    const auto parent = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(nodes.size()) - 1));
    std::vector<std::size_t> satellite_options;
    for (std::size_t x : nodes[parent].proximate_to) {
      bool used = false;
      for (const auto& n : nodes)
        used = used || (n.parent == parent && n.proximate_to.size() == 2 && n.proximate_to[1] == x);
      if (!used) satellite_options.push_back(x);
    }
    ClusterNode n;
    n.id = "n" + std::to_string(nodes.size() + 1);
    n.parent = parent;
    n.proximate_to = {parent};
    if (!satellite_options.empty() && rng.chance(1, 2)) n.proximate_to.push_back(rng.pick(satellite_options));
    nodes.push_back(std::move(n));
  }
  return nodes;
}

/// Multiplicities for one component satisfying the proximity inequality,
/// filled from the leaves up; the root multiplicity is at least 1.
inline std::vector<std::int64_t> random_mults(Rng& rng, const std::vector<ClusterNode>& nodes,
                                              std::int64_t max_extra) {
  std::vector<std::int64_t> m(nodes.size(), 0);
  for (std::size_t i = nodes.size(); i-- > 0;) {
    std::int64_t floor = 0;
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      for (auto q : nodes[j].proximate_to)
        if (q == i) floor += m[j];
    std::int64_t extra = rng.chance(1, 2) ? 0 : rng.uniform(1, max_extra);
    if (i == 0 && floor + extra == 0) extra = 1;
    m[i] = floor + extra;
  }
  return m;
}

/// Multiplicity 1 along a random chain of free points starting at the root:
/// the cluster of a smooth branch. Avoids the first-level children in `avoid`.
inline std::vector<std::int64_t> random_smooth_branch(Rng& rng, const std::vector<ClusterNode>& nodes,
                                                      const std::vector<std::size_t>& avoid = {}) {
  std::vector<std::int64_t> m(nodes.size(), 0);
  std::size_t at = 0;
  m[0] = 1;
  while (true) {
    std::vector<std::size_t> free_children;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].parent == at && nodes[i].proximate_to.size() == 1 &&
          !(at == 0 && std::find(avoid.begin(), avoid.end(), i) != avoid.end()))
        free_children.push_back(i);
    if (free_children.empty() || rng.chance(1, 3)) break;
    at = rng.pick(free_children);
    m[at] = 1;
  }
  return m;
}

inline WeightedCluster random_cluster(Rng& rng, std::size_t components, ClusterShape shape = {}) {
  auto nodes = random_tree(rng, static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(shape.max_nodes))));
  std::vector<std::string> ids;
  std::vector<std::vector<std::int64_t>> mults;
  for (std::size_t c = 0; c < components; ++c) {
    ids.push_back("C" + std::to_string(c + 1));
    mults.push_back(random_mults(rng, nodes, shape.max_extra));
  }
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t c = 0; c < components; ++c) nodes[i].mults.push_back(mults[c][i]);
  WeightedCluster cl(std::move(ids), std::move(nodes));
  validate_cluster(cl);
  return cl;
}

/// A valid reordering of the nodes: a random linear extension of the tree.
inline std::vector<std::size_t> random_topological_order(Rng& rng, const WeightedCluster& cl) {
  std::vector<std::size_t> order;
  std::vector<bool> placed(cl.size(), false);
  while (order.size() < cl.size()) {
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < cl.size(); ++i)
      if (!placed[i] && (!cl.node(i).parent || placed[*cl.node(i).parent])) ready.push_back(i);
    const auto next = rng.pick(ready);
    placed[next] = true;
    order.push_back(next);
  }
  return order;
}

/// A configuration on P^2 with a single marked point "p" carrying `cl`.
/// Component i gets class n_i H with n_i the sum of its multiplicities over
/// the cluster, so n_i n_j bounds every local intersection (Bezout).
inline DivisorConfiguration local_configuration(const WeightedCluster& cl, const std::vector<Rational>& coeffs) {
  const auto s = make_surface(9);
  DivisorConfiguration cfg{s, {}, {}};
  for (std::size_t c = 0; c < cl.components().size(); ++c) {
    std::int64_t n = 0;
    for (std::size_t i = 0; i < cl.size(); ++i) n += cl.mult(i, c);
    cfg.components.push_back({cl.components()[c], n * hyperplane(s), coeffs.at(c)});
  }
  cfg.points.push_back({"p", cl, {}, {}});
  return cfg;
}

}  // namespace delpezzo
