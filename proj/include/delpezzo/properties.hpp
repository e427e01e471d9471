#pragma once

// Randomised checks of the local statements behind the threshold bounds:
// Skoda's inequality, local adjunction, Cheltsov's two-curve inequality,
// convexity, blow-up transfer, monotonicity and independence of the order
// in which sibling points are blown up.
//
// Each property draws instances until `cases` of them satisfy its
// hypotheses (or the attempt budget runs out) and counts violations.

#include "delpezzo/lct.hpp"
#include "delpezzo/random.hpp"
#include "delpezzo/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace delpezzo {

struct PropertyOutcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t attempts = 0;
  std::size_t failures = 0;
  std::string counterexample;
};

namespace detail {

inline std::string describe(const WeightedCluster& cl, const std::vector<Rational>& coeffs, const Rational& lambda) {
  std::string out = "lambda=" + to_string(lambda) + " coeffs=[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) out += (i ? "," : "") + to_string(coeffs[i]);
  out += "] nodes=";
  for (const auto& n : cl.nodes()) {
    out += n.id + "(";
    for (std::size_t i = 0; i < n.proximate_to.size(); ++i)
      out += (i ? "," : "") + cl.node(n.proximate_to[i]).id;
    out += ";";
    for (std::size_t i = 0; i < n.mults.size(); ++i) out += (i ? "," : "") + std::to_string(n.mults[i]);
    out += ")";
  }
  return out;
}

/// A lambda just above or just below the threshold t.
inline Rational near_threshold(Rng& rng, const Rational& t) {
  const Rational u = make_rational(rng.uniform(1, 8), 16);
  return rng.chance(3, 4) ? t * (1 + u) : t * (1 - u / 2);
}

inline std::vector<Rational> random_coeffs(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi,
                                           std::int64_t max_den) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(rng.rational(lo, hi, max_den));
  return out;
}

inline Rational lct_value(const DivisorConfiguration& cfg) {
  const auto t = lct_at_point(cfg, "p").lct;
  if (t.is_infinite()) throw std::logic_error("random configuration vanishes at p");
  return *t.value;
}

/// `trial` returns nullopt when the hypotheses fail, else whether the
/// conclusion held, filling `note` on failure.
using Trial = std::function<std::optional<bool>(Rng&, std::string& note)>;

inline PropertyOutcome run_property(std::string name, std::uint64_t seed, std::size_t cases, const Trial& trial) {
  PropertyOutcome out;
  out.name = std::move(name);
  Rng rng(seed);
  const std::size_t budget = 200 * cases + 1000;
  while (out.cases < cases && out.attempts < budget) {
    ++out.attempts;
    std::string note;
    const auto verdict = trial(rng, note);
    if (!verdict) continue;
    ++out.cases;
    if (!*verdict) {
      if (out.failures == 0) out.counterexample = note;
      ++out.failures;
    }
  }
  return out;
}

inline Rational omega_pairing(const WeightedCluster& cl, std::size_t curve, const std::vector<Rational>& coeffs,
                              std::size_t first_omega) {
  Rational total = 0;
  for (std::size_t j = first_omega; j < coeffs.size(); ++j) total += coeffs[j] * noether_intersection(cl, curve, j);
  return total;
}

inline WeightedCluster assemble(std::vector<ClusterNode> nodes, std::vector<std::string> ids,
                                const std::vector<std::vector<std::int64_t>>& mults) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (const auto& m : mults) nodes[i].mults.push_back(m[i]);
  WeightedCluster cl(std::move(ids), std::move(nodes));
  validate_cluster(cl);
  return cl;
}

}  // namespace detail

/// Not lc at p implies mult_p(lambda D) > 1.
inline PropertyOutcome property_skoda(std::uint64_t seed, std::size_t cases) {
  return detail::run_property("skoda", seed, cases, [](Rng& rng, std::string& note) -> std::optional<bool> {
    const auto cl = random_cluster(rng, static_cast<std::size_t>(rng.uniform(1, 3)));
    const auto coeffs = detail::random_coeffs(rng, cl.components().size(), 1, 6, 4);
    const auto cfg = local_configuration(cl, coeffs);
    const auto lambda = detail::near_threshold(rng, detail::lct_value(cfg));
    if (is_log_canonical(cfg, lambda, "p").log_canonical) return std::nullopt;
    note = detail::describe(cl, coeffs, lambda);
    return lambda * multiplicity_at(cfg, "p") > 1;
  });
}

/// lambda(mC + Omega) with C smooth at p, lambda m <= 1, not lc at p implies
/// (C . lambda Omega)_p > 1.
inline PropertyOutcome property_adjunction(std::uint64_t seed, std::size_t cases) {
  return detail::run_property("adjunction", seed, cases, [](Rng& rng, std::string& note) -> std::optional<bool> {
    const auto nodes = random_tree(rng, static_cast<std::size_t>(rng.uniform(1, 7)));
    const auto omegas = static_cast<std::size_t>(rng.uniform(1, 3));
    std::vector<std::string> ids{"C"};
    std::vector<std::vector<std::int64_t>> mults{random_smooth_branch(rng, nodes)};
    for (std::size_t j = 0; j < omegas; ++j) {
      ids.push_back("O" + std::to_string(j + 1));
      mults.push_back(random_mults(rng, nodes, 2));
    }
    const auto cl = detail::assemble(nodes, ids, mults);
    std::vector<Rational> coeffs{rng.rational(1, 3, 6)};
    for (const auto& c : detail::random_coeffs(rng, omegas, 1, 6, 4)) coeffs.push_back(c);
    const auto cfg = local_configuration(cl, coeffs);
    const auto lambda = detail::near_threshold(rng, detail::lct_value(cfg));
    if (lambda * coeffs[0] > 1 || is_log_canonical(cfg, lambda, "p").log_canonical) return std::nullopt;
    note = detail::describe(cl, coeffs, lambda);
    return lambda * detail::omega_pairing(cl, 0, coeffs, 1) > 1;
  });
}

/// lambda(a1 C1 + a2 C2 + Omega) with C1, C2 smooth and transverse at p, lc
/// away from p, not lc at p and 0 < mult_p(lambda Omega) <= 1 implies
/// (lambda Omega . C1)_p > 2(1 - lambda a2) or (lambda Omega . C2)_p > 2(1 - lambda a1).
inline PropertyOutcome property_two_curves(std::uint64_t seed, std::size_t cases) {
  return detail::run_property("two_curves", seed, cases, [](Rng& rng, std::string& note) -> std::optional<bool> {
    const auto nodes = random_tree(rng, static_cast<std::size_t>(rng.uniform(1, 7)));
    const auto c1 = random_smooth_branch(rng, nodes);
    std::vector<std::size_t> avoid;
    for (std::size_t i = 1; i < nodes.size(); ++i)
      if (nodes[i].parent == 0 && c1[i] > 0) avoid.push_back(i);
    const auto c2 = random_smooth_branch(rng, nodes, avoid);
    const auto omegas = static_cast<std::size_t>(rng.uniform(1, 2));
    std::vector<std::string> ids{"C1", "C2"};
    std::vector<std::vector<std::int64_t>> mults{c1, c2};
    for (std::size_t j = 0; j < omegas; ++j) {
      ids.push_back("O" + std::to_string(j + 1));
      mults.push_back(random_mults(rng, nodes, 1));
    }
    const auto cl = detail::assemble(nodes, ids, mults);
    if (noether_intersection(cl, 0, 1) != 1) throw std::logic_error("two-curve generator lost transversality");
    auto coeffs = detail::random_coeffs(rng, 2, 2, 8, 8);
    for (const auto& c : detail::random_coeffs(rng, omegas, 1, 3, 8)) coeffs.push_back(c);
    const auto cfg = local_configuration(cl, coeffs);
    const auto lambda = detail::near_threshold(rng, detail::lct_value(cfg));
    for (const auto& c : coeffs)
      if (lambda * c > 1) return std::nullopt;
    Rational mult_omega = 0;
    for (std::size_t j = 2; j < coeffs.size(); ++j) mult_omega += lambda * coeffs[j] * cl.mult(0, j);
    if (mult_omega <= 0 || mult_omega > 1) return std::nullopt;
    if (is_log_canonical(cfg, lambda, "p").log_canonical) return std::nullopt;
    note = detail::describe(cl, coeffs, lambda);
    const Rational with_c1 = lambda * detail::omega_pairing(cl, 0, coeffs, 2);
    const Rational with_c2 = lambda * detail::omega_pairing(cl, 1, coeffs, 2);
    return with_c1 > 2 * (1 - lambda * coeffs[1]) || with_c2 > 2 * (1 - lambda * coeffs[0]);
  });
}

/// lct_p(alpha D + (1 - alpha) B) >= min(lct_p D, lct_p B).
inline PropertyOutcome property_convexity(std::uint64_t seed, std::size_t cases) {
  return detail::run_property("convexity", seed, cases, [](Rng& rng, std::string& note) -> std::optional<bool> {
    const auto cl = random_cluster(rng, static_cast<std::size_t>(rng.uniform(1, 3)));
    const auto n = cl.components().size();
    auto d = detail::random_coeffs(rng, n, 0, 4, 4);
    auto b = detail::random_coeffs(rng, n, 0, 4, 4);
    d[0] += 1;
    b[n - 1] += 1;
    const Rational alpha = make_rational(rng.uniform(0, 8), 8);
    std::vector<Rational> mix;
    for (std::size_t i = 0; i < n; ++i) mix.push_back(alpha * d[i] + (1 - alpha) * b[i]);
    const auto ld = lct_at_point(local_configuration(cl, d), "p").lct;
    const auto lb = lct_at_point(local_configuration(cl, b), "p").lct;
    const auto lm = lct_at_point(local_configuration(cl, mix), "p").lct;
    note = detail::describe(cl, mix, alpha);
    return !(lm < (lb < ld ? lb : ld));
  });
}

/// (S, lambda D) is lc at p iff the blown-up pair is lc at every marked
/// point of E and at a generic point of E.
inline PropertyOutcome property_transfer(std::uint64_t seed, std::size_t cases) {
  return detail::run_property("transfer", seed, cases, [](Rng& rng, std::string& note) -> std::optional<bool> {
    const auto cl = random_cluster(rng, static_cast<std::size_t>(rng.uniform(1, 3)));
    const auto coeffs = detail::random_coeffs(rng, cl.components().size(), 1, 6, 4);
    const auto cfg = local_configuration(cl, coeffs);
    const auto lambda = detail::near_threshold(rng, detail::lct_value(cfg));
    const bool before = is_log_canonical(cfg, lambda, "p").log_canonical;
    const auto up = transform_by_blowup(scaled(cfg, lambda), "p");
    validate_configuration(up.config, false);
    bool after = true;
    for (const auto& q : up.points) after = after && is_log_canonical(up.config, Rational(1), q).log_canonical;
    note = detail::describe(cl, coeffs, lambda);
    return before == after;
  });
}

/// Raising one coefficient never raises the threshold.
inline PropertyOutcome property_monotonicity(std::uint64_t seed, std::size_t cases) {
  return detail::run_property("monotonicity", seed, cases, [](Rng& rng, std::string& note) -> std::optional<bool> {
    const auto cl = random_cluster(rng, static_cast<std::size_t>(rng.uniform(1, 3)));
    auto coeffs = detail::random_coeffs(rng, cl.components().size(), 1, 6, 4);
    const auto before = lct_at_point(local_configuration(cl, coeffs), "p").lct;
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(coeffs.size()) - 1));
    coeffs[i] += rng.rational(1, 4, 4);
    const auto after = lct_at_point(local_configuration(cl, coeffs), "p").lct;
    note = detail::describe(cl, coeffs, Rational(0));
    return !(before < after);
  });
}

/// Listing sibling blow-ups in another order changes neither the threshold
/// nor the set of constraints.
inline PropertyOutcome property_order_independence(std::uint64_t seed, std::size_t cases) {
  return detail::run_property("order_independence", seed, cases, [](Rng& rng, std::string& note) -> std::optional<bool> {
    const auto cl = random_cluster(rng, static_cast<std::size_t>(rng.uniform(1, 3)));
    const auto coeffs = detail::random_coeffs(rng, cl.components().size(), 1, 6, 4);
    const auto shuffled = reorder_nodes(cl, random_topological_order(rng, cl));
    const auto a = lct_at_point(local_configuration(cl, coeffs), "p");
    const auto b = lct_at_point(local_configuration(shuffled, coeffs), "p");
    auto key = [](std::vector<ConstraintRow> rows) {
      std::sort(rows.begin(), rows.end(), [](const ConstraintRow& x, const ConstraintRow& y) { return x.node < y.node; });
      return rows;
    };
    note = detail::describe(shuffled, coeffs, Rational(0));
    return a.lct == b.lct && key(a.rows) == key(b.rows);
  });
}

inline std::vector<PropertyOutcome> run_properties(std::uint64_t seed, std::size_t cases) {
  return {property_skoda(seed, cases),        property_adjunction(seed + 1, cases),
          property_two_curves(seed + 2, cases), property_convexity(seed + 3, cases),
          property_transfer(seed + 4, cases),   property_monotonicity(seed + 5, cases),
          property_order_independence(seed + 6, cases)};
}

inline Report verify_properties(std::uint64_t seed, std::size_t cases) {
  Report r{"properties", {}};
  for (const auto& o : run_properties(seed, cases)) {
    std::string computed = std::to_string(o.cases) + " cases, " + std::to_string(o.failures) + " failures";
    if (o.failures) computed += "; first: " + o.counterexample;
    r.add("properties." + o.name, std::to_string(cases) + " cases, 0 failures", computed,
          o.cases >= cases && o.failures == 0);
  }
  return r;
}

}  // namespace delpezzo
