#pragma once

// Named curve classes on the blow-up of P^2 in five points (degree 4), in the
// basis (H; E_1, ..., E_5). Indices are 1-based.

#include "delpezzo/lattice.hpp"

#include <string>
#include <vector>

namespace delpezzo {

class Degree4Classes {
 public:
  Degree4Classes() : s_(make_surface(4)) {}

  const SurfaceModel& surface() const { return s_; }

  DivisorClass H() const { return hyperplane(s_); }
  DivisorClass E(std::size_t i) const { return exceptional(s_, i); }
  DivisorClass sum_E() const {
    auto out = DivisorClass::zero(s_);
    for (std::size_t i = 1; i <= 5; ++i) out = out + E(i);
    return out;
  }
  /// Line through p_i and p_j.
  DivisorClass L(std::size_t i, std::size_t j) const { return H() - E(i) - E(j); }
  /// Conic through all five points.
  DivisorClass C0() const { return 2 * H() - sum_E(); }
  /// Lines through p_i.
  DivisorClass B(std::size_t i) const { return H() - E(i); }
  /// Conics through the four points other than p_i.
  DivisorClass A(std::size_t i) const { return 2 * H() - sum_E() + E(i); }
  /// Cubics through all points, singular at p_i.
  DivisorClass Q(std::size_t i) const { return 3 * H() - E(i) - sum_E(); }
  DivisorClass R() const { return H(); }
  /// Conics through p_i, p_j, p_k.
  DivisorClass R(std::size_t i, std::size_t j, std::size_t k) const { return 2 * H() - E(i) - E(j) - E(k); }

 private:
  SurfaceModel s_;
};

struct NamedClass {
  std::string name;
  DivisorClass cls;
};

struct ClassFamily {
  std::string name;  // e.g. "L_ij"
  std::int64_t deg;
  std::int64_t self;
  std::vector<NamedClass> members;
};

/// The low-degree linear systems on the degree-4 surface with their
/// anticanonical degree and self-intersection.
inline std::vector<ClassFamily> degree4_families() {
  const Degree4Classes d;
  auto idx = [](auto... n) { return (std::string{} + ... + std::to_string(n)); };
  std::vector<ClassFamily> out;
  ClassFamily e{"E_i", 1, -1, {}}, l{"L_ij", 1, -1, {}}, c0{"C_0", 1, -1, {{"C0", d.C0()}}};
  ClassFamily b{"B_i", 2, 0, {}}, a{"A_i", 2, 0, {}}, q{"Q_i", 3, 1, {}}, r{"R", 3, 1, {{"R", d.R()}}};
  ClassFamily r3{"R_ijk", 3, 1, {}};
  for (std::size_t i = 1; i <= 5; ++i) {
    e.members.push_back({"E" + idx(i), d.E(i)});
    b.members.push_back({"B" + idx(i), d.B(i)});
    a.members.push_back({"A" + idx(i), d.A(i)});
    q.members.push_back({"Q" + idx(i), d.Q(i)});
    for (std::size_t j = i + 1; j <= 5; ++j) {
      l.members.push_back({"L" + idx(i, j), d.L(i, j)});
      for (std::size_t k = j + 1; k <= 5; ++k) r3.members.push_back({"R" + idx(i, j, k), d.R(i, j, k)});
    }
  }
  return {e, l, c0, b, a, q, r, r3};
}

/// Members of all families of the given anticanonical degree.
inline std::vector<NamedClass> degree4_named(std::int64_t deg) {
  std::vector<NamedClass> out;
  for (const auto& f : degree4_families())
    if (f.deg == deg) out.insert(out.end(), f.members.begin(), f.members.end());
  return out;
}

inline std::string degree4_name(const DivisorClass& c) {
  for (const auto& f : degree4_families())
    for (const auto& m : f.members)
      if (m.cls == c) return m.name;
  return to_string(c);
}

}  // namespace delpezzo
