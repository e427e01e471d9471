#pragma once

// Model changes of del Pezzo surfaces as lattice isometries.
//
// Contracting a different set of disjoint (-1)-curves to reach P^2 changes the
// basis (H; E_i) by an isometry of the Picard lattice fixing K. Those
// isometries form the Weyl group of the root system K^perp, generated by the
// reflections in the simple roots E_i - E_{i+1} (relabelling the blown-up
// points) and H - E_1 - E_2 - E_3 (the quadratic Cremona transformation).

#include "delpezzo/lattice.hpp"

#include <deque>
#include <map>
#include <utility>
#include <vector>

namespace delpezzo {

/// H - E_1 - E_2 - E_3.
inline DivisorClass cremona_root(const SurfaceModel& s) {
  return hyperplane(s) - exceptional(s, 1) - exceptional(s, 2) - exceptional(s, 3);
}

/// Simple-root reflections of K^perp for the blow-up basis.
inline std::vector<LatticeIsometry> weyl_generators(const SurfaceModel& s) {
  if (s.basis_kind() != BasisKind::blowup)
    throw std::invalid_argument("model isometries are only supported on the blow-up basis");
  std::vector<LatticeIsometry> gens;
  const std::size_t r = s.exceptional_count();
  for (std::size_t i = 1; i < r; ++i)
    gens.push_back(LatticeIsometry::reflection(exceptional(s, i) - exceptional(s, i + 1)));
  if (r >= 3) gens.push_back(LatticeIsometry::reflection(cremona_root(s)));
  return gens;
}

struct IsometrySearchLimits {
  std::size_t max_depth = 256;
  std::size_t max_states = 1u << 21;
};

class NoIsometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finds a K-fixing isometry in the Weyl group sending each source class to
/// its target. Breadth-first over words in weyl_generators(), tracking only the
/// images of the sources, so the search space is the orbit of the source tuple
/// rather than the whole group.
///
/// Throws NoIsometryError if the intersection data of sources and targets
/// differ or the orbit is exhausted without reaching the targets.
inline LatticeIsometry find_model_isometry(
    const SurfaceModel& s, const std::vector<std::pair<DivisorClass, DivisorClass>>& targets,
    IsometrySearchLimits limits = {}) {
  for (const auto& [from, to] : targets) {
    if (!(from.surface() == s) || !(to.surface() == s))
      throw std::invalid_argument("isometry targets must live on " + s.name());
    if (degree_of(from) != degree_of(to) || self_intersection(from) != self_intersection(to))
      throw NoIsometryError("degree or self-intersection differs for " + to_string(from) +
                            " -> " + to_string(to));
  }
  for (std::size_t i = 0; i < targets.size(); ++i)
    for (std::size_t j = i + 1; j < targets.size(); ++j) {
      const auto before = intersect(targets[i].first, targets[j].first);
      const auto after = intersect(targets[i].second, targets[j].second);
      if (before != after)
        throw NoIsometryError("intersection " + to_string(targets[i].first) + "." +
                              to_string(targets[j].first) + " = " + std::to_string(before) +
                              " but targets meet in " + std::to_string(after));
    }

  const auto gens = weyl_generators(s);
  using State = std::vector<std::int64_t>;
  auto flatten = [](const std::vector<DivisorClass>& cs) {
    State out;
    for (const auto& c : cs) out.insert(out.end(), c.coeffs().begin(), c.coeffs().end());
    return out;
  };

  std::vector<DivisorClass> start, goal;
  for (const auto& [from, to] : targets) {
    start.push_back(from);
    goal.push_back(to);
  }
  const State goal_key = flatten(goal);

  struct Entry {
    std::vector<DivisorClass> images;
    LatticeIsometry word;
    std::size_t depth;
  };
  std::map<State, bool> seen;
  std::deque<Entry> queue;
  queue.push_back({start, LatticeIsometry::identity(s), 0});
  seen.emplace(flatten(start), true);

  while (!queue.empty()) {
    auto entry = std::move(queue.front());
    queue.pop_front();
    if (flatten(entry.images) == goal_key) return entry.word;
    if (entry.depth >= limits.max_depth) continue;
    for (const auto& g : gens) {
      std::vector<DivisorClass> next;
      next.reserve(entry.images.size());
      for (const auto& c : entry.images) next.push_back(apply_isometry(g, c));
      auto key = flatten(next);
      if (!seen.emplace(std::move(key), true).second) continue;
      if (seen.size() > limits.max_states)
        throw NoIsometryError("isometry search exceeded its state budget");
      queue.push_back({std::move(next), g.compose(entry.word), entry.depth + 1});
    }
  }
  throw NoIsometryError("targets are not in the Weyl orbit of the sources");
}

}  // namespace delpezzo
