#pragma once

// Log canonical thresholds from cluster data.
//
// Blowing up every node of the cluster at p gives a log resolution of (S, D)
// near p. With exceptional curve E_q of node q,
//   pi^*(K_S + lambda D) = K_Y + lambda D~ + sum_q (lambda v_q(D) - k_q) E_q,
// so (S, lambda D) is log canonical at p iff lambda d_i <= 1 for every
// component through p and lambda v_q(D) <= k_q + 1 for every node.

#include "delpezzo/configuration.hpp"

#include <string>
#include <vector>

namespace delpezzo {

struct CoefficientRow {
  std::string component;
  Rational coeff;
  Threshold ratio;  // 1/d, or inf when d <= 0
};

struct ConstraintRow {
  std::string point;
  std::string node;
  std::int64_t k = 0;  // discrepancy k_E; the constraint is lambda v <= k + 1
  Rational v;          // v_E(D)
  Threshold ratio;     // (k + 1)/v, or inf when v <= 0

  friend bool operator==(const ConstraintRow&, const ConstraintRow&) = default;
};

struct Minimizer {
  enum class Kind { none, component, node };
  Kind kind = Kind::none;
  std::string point;  // empty for components
  std::string id;

  friend bool operator==(const Minimizer&, const Minimizer&) = default;
};

inline std::string to_string(Minimizer::Kind k) {
  switch (k) {
    case Minimizer::Kind::component: return "component";
    case Minimizer::Kind::node: return "node";
    default: return "none";
  }
}

struct LctCertificate {
  Threshold lct;
  Minimizer minimizer;
  std::vector<CoefficientRow> coefficients;
  std::vector<ConstraintRow> rows;
};

namespace detail {

inline Threshold bound(const Rational& allowance, const Rational& load) {
  if (load <= 0) return Threshold::infinite();
  return Threshold{allowance / load};
}

inline void add_point_rows(const DivisorConfiguration& cfg, const std::string& p,
                           std::vector<ConstraintRow>& rows) {
  const auto cl = compile_configuration(cfg, p);
  const auto v = weighted_valuations(cl, cluster_weights(cfg, cl));
  const auto k = discrepancies(cl);
  for (std::size_t i = 0; i < cl.size(); ++i)
    rows.push_back({p, cl.node(i).id, k[i], v[i], bound(Rational(k[i] + 1), v[i])});
}

inline LctCertificate certify(const DivisorConfiguration& cfg, const std::vector<std::size_t>& comps,
                              const std::vector<std::string>& points) {
  LctCertificate cert;
  cert.lct = Threshold::infinite();
  for (auto c : comps) {
    const auto& comp = cfg.components[c];
    cert.coefficients.push_back({comp.id, comp.coeff, bound(Rational(1), comp.coeff)});
  }
  for (const auto& p : points) add_point_rows(cfg, p, cert.rows);
  // Strict comparison keeps the earliest minimizer: components, then nodes.
  for (const auto& row : cert.coefficients)
    if (row.ratio < cert.lct) {
      cert.lct = row.ratio;
      cert.minimizer = {Minimizer::Kind::component, "", row.component};
    }
  for (const auto& row : cert.rows)
    if (row.ratio < cert.lct) {
      cert.lct = row.ratio;
      cert.minimizer = {Minimizer::Kind::node, row.point, row.node};
    }
  return cert;
}

}  // namespace detail

/// lct_p(S, D): components through p and the nodes of the cluster at p.
inline LctCertificate lct_at_point(const DivisorConfiguration& cfg, const std::string& p) {
  return detail::certify(cfg, components_at(cfg, p), {p});
}

/// lct(S, D) over every component and every marked point. Points not marked
/// are assumed to be simple normal crossing points of D, where only the
/// coefficient constraints bind.
inline LctCertificate lct_global(const DivisorConfiguration& cfg) {
  std::vector<std::size_t> comps(cfg.components.size());
  for (std::size_t i = 0; i < comps.size(); ++i) comps[i] = i;
  std::vector<std::string> points;
  for (const auto& p : cfg.points) points.push_back(p.id);
  return detail::certify(cfg, comps, points);
}

struct LcVerdict {
  bool log_canonical = true;
  bool tight = false;  // some constraint holds with equality
  LctCertificate certificate;
};

/// Evaluates every constraint of the certificate at lambda directly.
inline LcVerdict is_log_canonical(const DivisorConfiguration& cfg, const Rational& lambda,
                                  const std::optional<std::string>& p = std::nullopt) {
  if (lambda < 0) throw std::domain_error("lambda must be non-negative");
  LcVerdict out;
  out.certificate = p ? lct_at_point(cfg, *p) : lct_global(cfg);
  for (const auto& row : out.certificate.coefficients) {
    const Rational load = lambda * row.coeff;
    if (load > 1) out.log_canonical = false;
    if (load == 1) out.tight = true;
  }
  for (const auto& row : out.certificate.rows) {
    const Rational load = lambda * row.v;
    if (load > row.k + 1) out.log_canonical = false;
    if (load == row.k + 1) out.tight = true;
  }
  return out;
}

/// a_E = lambda v_E(D) - k_E for each node at p: the coefficient of E_q in
/// the log pull-back of K_S + lambda D.
inline std::vector<std::pair<std::string, Rational>> pullback_coefficients(
    const DivisorConfiguration& cfg, const std::string& p, const Rational& lambda) {
  const auto cl = compile_configuration(cfg, p);
  const auto v = weighted_valuations(cl, cluster_weights(cfg, cl));
  const auto k = discrepancies(cl);
  std::vector<std::pair<std::string, Rational>> out;
  for (std::size_t i = 0; i < cl.size(); ++i) out.emplace_back(cl.node(i).id, lambda * v[i] - k[i]);
  return out;
}

struct NonKltLocus {
  std::vector<std::string> components;
  std::vector<std::string> points;

  bool empty() const { return components.empty() && points.empty(); }
  friend bool operator==(const NonKltLocus&, const NonKltLocus&) = default;
};

/// Components with lambda d_i >= 1 and marked points over which some
/// exceptional curve has discrepancy <= -1, i.e. lambda v_E(D) - k_E >= 1.
inline NonKltLocus non_klt_locus(const DivisorConfiguration& cfg, const Rational& lambda) {
  NonKltLocus out;
  for (const auto& c : cfg.components)
    if (lambda * c.coeff >= 1) out.components.push_back(c.id);
  for (const auto& p : cfg.points) {
    for (const auto& [node, a] : pullback_coefficients(cfg, p.id, lambda))
      if (a >= 1) {
        out.points.push_back(p.id);
        break;
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Blow-up transfer

struct BlownUpConfiguration {
  DivisorConfiguration config;
  std::string exceptional;          // id of the new component E
  std::vector<std::string> points;  // marked points on E, generic direction last
};

/// Blows up p. Components become strict transforms C - mult_p(C) E, and E
/// enters with coefficient mult_p(D) - 1 (possibly non-positive). The points
/// of E that carry data become marked points: the subtree of each child of
/// the root, each unlisted crossing of a strict transform with E, and one
/// generic direction crossed by E alone.
inline BlownUpConfiguration transform_by_blowup(const DivisorConfiguration& cfg, const std::string& p) {
  const auto cl = compile_configuration(cfg, p);
  const auto surface = blow_up_point(cfg.surface);
  const auto rank = surface.rank();

  std::string e_id = "E_" + p;
  while (cfg.find_component(e_id)) e_id += "'";

  BlownUpConfiguration out{DivisorConfiguration{surface, {}, {}}, e_id, {}};
  auto& next = out.config;
  Rational mult_d = 0;
  for (const auto& c : cfg.components) {
    auto coeffs = c.cls.coeffs();
    std::int64_t m = 0;
    if (auto i = cl.find_component(c.id)) m = cl.mult(0, *i);
    coeffs.push_back(-m);
    mult_d += c.coeff * m;
    next.components.push_back({c.id, DivisorClass(surface, coeffs), c.coeff});
  }
  next.components.push_back({e_id, DivisorClass::basis(surface, rank - 1), mult_d - 1});

  for (const auto& q : cfg.points)
    if (q.id != p) next.points.push_back(q);

  auto fresh_point = [&](const std::string& base) {
    std::string id = base;
    auto taken = [&](const std::string& s) {
      for (const auto& q : next.points)
        if (q.id == s) return true;
      return false;
    };
    while (taken(id)) id += "'";
    return id;
  };

  // Subtrees rooted at the children of the root.
  for (auto child : cl.children(0)) {
    std::vector<std::size_t> keep;  // old indices in the subtree, in order
    std::vector<bool> inside(cl.size(), false);
    inside[child] = true;
    for (std::size_t i = child; i < cl.size(); ++i) {
      if (i != child && cl.node(i).parent && inside[*cl.node(i).parent]) inside[i] = true;
      if (inside[i]) keep.push_back(i);
    }
    std::vector<std::size_t> position(cl.size(), 0);
    for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = i;

    std::vector<std::size_t> comps;
    for (std::size_t c = 0; c < cl.components().size(); ++c)
      if (cl.mult(child, c) > 0) comps.push_back(c);
    std::vector<std::string> ids;
    for (auto c : comps) ids.push_back(cl.components()[c]);
    ids.push_back(e_id);

    std::vector<ClusterNode> nodes;
    for (auto old : keep) {
      ClusterNode n;
      n.id = cl.node(old).id;
      if (old != child) {
        n.parent = position[*cl.node(old).parent];
        for (auto q : cl.node(old).proximate_to)
          if (q != 0) n.proximate_to.push_back(position[q]);
      }
      bool on_e = false;
      for (auto q : cl.node(old).proximate_to) on_e = on_e || q == 0;
      for (auto c : comps) n.mults.push_back(cl.mult(old, c));
      n.mults.push_back(on_e ? 1 : 0);
      nodes.push_back(std::move(n));
    }
    WeightedCluster sub(ids, std::move(nodes));
    validate_cluster(sub);
    const auto id = fresh_point(p + "/" + cl.node(child).id);
    next.points.push_back({id, sub, {}, {}});
    out.points.push_back(id);
  }

  // Unlisted crossings of strict transforms with E.
  for (std::size_t c = 0; c < cl.components().size(); ++c) {
    const auto crossings = cl.excess(0, c);
    for (std::int64_t t = 0; t < crossings; ++t) {
      const auto id = fresh_point(p + "/" + cl.components()[c] + "#" + std::to_string(t + 1));
      next.points.push_back({id, Germ{GermKind::smooth_transverse, 2},
                             {{cl.components()[c], 0}, {e_id, 1}}, {}});
      out.points.push_back(id);
    }
  }

  const auto generic = fresh_point(p + "/generic");
  next.points.push_back({generic, Germ{GermKind::smooth_transverse, 1}, {{e_id, 0}}, {}});
  out.points.push_back(generic);
  return out;
}

}  // namespace delpezzo
