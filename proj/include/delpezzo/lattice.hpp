#pragma once

// Picard-lattice arithmetic for del Pezzo surfaces.
//
// A surface is modelled by its Picard lattice with a fixed basis: either the
// blow-up basis (H; E_1..E_r) of P^2 blown up in r = 9 - d points, with form
// diag(1, -1, ..., -1), or the ruling basis (f_1, f_2) of P^1 x P^1 with form
// [[0, 1], [1, 0]]. Everything here is integer linear algebra; there is no
// geometry beyond the intersection form and the canonical class.

#include "delpezzo/rational.hpp"

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdlib>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace delpezzo {

enum class BasisKind { blowup, quadric };

inline std::string to_string(BasisKind k) {
  return k == BasisKind::blowup ? "blowup" : "quadric";
}

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<std::int64_t>& data() const { return data_; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Immutable handle to a surface's lattice data. Copies share storage.
///
/// `degree` is K^2. For del Pezzo surfaces it is in 1..9; models produced by
/// blowing up further points (see blow_up_point) carry the same structure with
/// smaller, possibly non-positive, degree.
class SurfaceModel {
 public:
  int degree() const { return data_->degree; }
  BasisKind basis_kind() const { return data_->kind; }
  std::size_t rank() const { return data_->canonical.size(); }
  /// Number of exceptional basis vectors E_i.
  std::size_t exceptional_count() const {
    return rank() - (basis_kind() == BasisKind::blowup ? 1 : 2);
  }
  std::int64_t gram(std::size_t i, std::size_t j) const { return data_->gram(i, j); }
  const IntMatrix& gram_matrix() const { return data_->gram; }
  const std::vector<std::int64_t>& canonical_coeffs() const { return data_->canonical; }

  /// True for the surfaces produced by make_surface (not further blown up).
  bool is_del_pezzo() const { return data_->del_pezzo; }

  /// Basis label: "H", "E1".. or "f1", "f2", "E1"...
  std::string basis_label(std::size_t i) const {
    if (basis_kind() == BasisKind::blowup)
      return i == 0 ? "H" : "E" + std::to_string(i);
    if (i < 2) return "f" + std::to_string(i + 1);
    return "E" + std::to_string(i - 1);
  }

  std::string name() const {
    return "degree " + std::to_string(degree()) + " (" + to_string(basis_kind()) +
           ", rank " + std::to_string(rank()) + ")";
  }

  friend bool operator==(const SurfaceModel& a, const SurfaceModel& b) {
    return a.data_ == b.data_ ||
           (a.degree() == b.degree() && a.basis_kind() == b.basis_kind() &&
            a.rank() == b.rank() && a.is_del_pezzo() == b.is_del_pezzo());
  }

 private:
  struct Data {
    int degree;
    BasisKind kind;
    bool del_pezzo;
    IntMatrix gram;
    std::vector<std::int64_t> canonical;
  };

  explicit SurfaceModel(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;

  friend SurfaceModel make_surface(int degree, BasisKind kind);
  friend SurfaceModel blow_up_point(const SurfaceModel& s);
};

inline SurfaceModel make_surface(int degree, BasisKind kind = BasisKind::blowup) {
  if (degree < 1 || degree > 9)
    throw std::invalid_argument("del Pezzo degree must be in 1..9, got " +
                                std::to_string(degree));
  if (kind == BasisKind::quadric && degree != 8)
    throw std::invalid_argument("quadric basis exists only in degree 8");

  SurfaceModel::Data d{degree, kind, true, {}, {}};
  if (kind == BasisKind::quadric) {
    d.gram = IntMatrix(2, 2);
    d.gram(0, 1) = d.gram(1, 0) = 1;
    d.canonical = {-2, -2};
  } else {
    const std::size_t r = static_cast<std::size_t>(9 - degree);
    d.gram = IntMatrix(r + 1, r + 1);
    d.gram(0, 0) = 1;
    for (std::size_t i = 1; i <= r; ++i) d.gram(i, i) = -1;
    d.canonical.assign(r + 1, 1);
    d.canonical[0] = -3;
  }
  return SurfaceModel(std::make_shared<const SurfaceModel::Data>(std::move(d)));
}

/// Lattice of the blow-up of `s` at one point: the form gains a -1 block and
/// K gains +E (K' = pi^*K + E), so K'^2 = K^2 - 1.
inline SurfaceModel blow_up_point(const SurfaceModel& s) {
  const std::size_t n = s.rank();
  SurfaceModel::Data d{s.degree() - 1, s.basis_kind(), false, IntMatrix(n + 1, n + 1), {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.gram(i, j) = s.gram(i, j);
  d.gram(n, n) = -1;
  d.canonical = s.canonical_coeffs();
  d.canonical.push_back(1);
  return SurfaceModel(std::make_shared<const SurfaceModel::Data>(std::move(d)));
}

/// Integer divisor class in the surface's basis.
class DivisorClass {
 public:
  DivisorClass(SurfaceModel s, std::vector<std::int64_t> coeffs)
      : surface_(std::move(s)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != surface_.rank())
      throw std::invalid_argument("class has " + std::to_string(coeffs_.size()) +
                                  " coefficients, surface rank is " +
                                  std::to_string(surface_.rank()));
  }

  static DivisorClass zero(const SurfaceModel& s) {
    return DivisorClass(s, std::vector<std::int64_t>(s.rank(), 0));
  }
  static DivisorClass basis(const SurfaceModel& s, std::size_t i) {
    auto c = zero(s);
    c.coeffs_.at(i) = 1;
    return c;
  }

  const SurfaceModel& surface() const { return surface_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t size() const { return coeffs_.size(); }

  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    require_same(a, b);
    auto c = a;
    for (std::size_t i = 0; i < c.coeffs_.size(); ++i) c.coeffs_[i] += b.coeffs_[i];
    return c;
  }
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    require_same(a, b);
    auto c = a;
    for (std::size_t i = 0; i < c.coeffs_.size(); ++i) c.coeffs_[i] -= b.coeffs_[i];
    return c;
  }
  friend DivisorClass operator-(const DivisorClass& a) { return zero(a.surface_) - a; }
  friend DivisorClass operator*(std::int64_t k, const DivisorClass& a) {
    auto c = a;
    for (auto& x : c.coeffs_) x *= k;
    return c;
  }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.surface_ == b.surface_ && a.coeffs_ == b.coeffs_;
  }
  /// Lexicographic on coefficients; only meaningful on one surface.
  friend std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b) {
    require_same(a, b);
    return a.coeffs_ <=> b.coeffs_;
  }

  static void require_same(const DivisorClass& a, const DivisorClass& b) {
    if (!(a.surface_ == b.surface_))
      throw std::invalid_argument("classes live on different surfaces: " +
                                  a.surface_.name() + " vs " + b.surface_.name());
  }

 private:
  SurfaceModel surface_;
  std::vector<std::int64_t> coeffs_;
};

inline DivisorClass canonical_class(const SurfaceModel& s) {
  return DivisorClass(s, s.canonical_coeffs());
}

inline DivisorClass anticanonical_class(const SurfaceModel& s) { return -canonical_class(s); }

/// H in the blow-up basis.
inline DivisorClass hyperplane(const SurfaceModel& s) {
  if (s.basis_kind() != BasisKind::blowup) throw std::invalid_argument("no H on a quadric basis");
  return DivisorClass::basis(s, 0);
}

/// E_i, 1-based as in the usual notation.
inline DivisorClass exceptional(const SurfaceModel& s, std::size_t i) {
  if (i < 1 || i > s.exceptional_count())
    throw std::out_of_range("no exceptional class E" + std::to_string(i) + " on " + s.name());
  return DivisorClass::basis(s, s.basis_kind() == BasisKind::blowup ? i : i + 1);
}

inline std::int64_t intersect(const DivisorClass& a, const DivisorClass& b) {
  DivisorClass::require_same(a, b);
  const auto& s = a.surface();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < s.rank(); ++j) total += a[i] * s.gram(i, j) * b[j];
  }
  return total;
}

inline std::int64_t self_intersection(const DivisorClass& c) { return intersect(c, c); }

/// Anticanonical degree -K.c.
inline std::int64_t degree_of(const DivisorClass& c) {
  return intersect(anticanonical_class(c.surface()), c);
}

/// p_a = 1 + (c.c + K.c)/2. Half-integral values mean the class is not the
/// class of any curve.
inline Rational arithmetic_genus(const DivisorClass& c) {
  const auto s = self_intersection(c);
  const auto k = intersect(canonical_class(c.surface()), c);
  return make_rational(2 + s + k, 2);
}

/// Rational combination sum d_i c_i, coefficientwise.
inline std::vector<Rational> rational_combination(const std::vector<Rational>& weights,
                                                  const std::vector<DivisorClass>& classes) {
  if (weights.size() != classes.size()) throw std::invalid_argument("weights/classes mismatch");
  if (classes.empty()) return {};
  std::vector<Rational> out(classes.front().size(), Rational(0));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    DivisorClass::require_same(classes.front(), classes[i]);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += weights[i] * classes[i][j];
  }
  return out;
}

inline std::string to_string(const DivisorClass& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + ")";
}

namespace detail {

inline std::int64_t isqrt(std::int64_t n) {
  if (n <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Fills e[pos..] so that the remaining entries sum to `sum` and their squares
// sum to `sq`. Cauchy-Schwarz on the k remaining entries (sum^2 <= k * sq)
// prunes the search; each entry is bounded by sqrt(sq).
inline void fill_exceptional(std::vector<std::int64_t>& c, std::size_t pos, std::int64_t sum,
                             std::int64_t sq, std::vector<std::vector<std::int64_t>>& out) {
  const auto k = static_cast<std::int64_t>(c.size() - pos);
  if (sq < 0) return;
  if (k == 0) {
    if (sum == 0 && sq == 0) out.push_back(c);
    return;
  }
  if (sum * sum > k * sq) return;
  const auto bound = isqrt(sq);
  for (std::int64_t e = -bound; e <= bound; ++e) {
    c[pos] = e;
    fill_exceptional(c, pos + 1, sum - e, sq - e * e, out);
  }
  c[pos] = 0;
}

}  // namespace detail

/// All classes c with -K.c = deg, c.c = self_int and p_a(c) = 0, sorted
/// lexicographically by coefficient vector.
///
/// Blow-up basis, c = (a; e_1..e_r): -K.c = 3a + sum e_i and c.c = a^2 - sum e_i^2.
/// Cauchy-Schwarz on the e_i gives (deg - 3a)^2 <= r (a^2 - self_int), i.e.
///   K^2 a^2 - 6 deg a + deg^2 + r self_int <= 0.
/// This is the Hodge index inequality for c against -K; with K^2 = 9 - r > 0
/// it confines a to a bounded interval, and then |e_i| <= sqrt(a^2 - self_int).
///
/// Quadric basis, c = (x, y): -K.c = 2(x + y), c.c = 2xy, so x and y are the
/// roots of t^2 - (deg/2) t + self_int/2; Cauchy's root bound limits the scan.
inline std::vector<DivisorClass> enumerate_classes(const SurfaceModel& s, std::int64_t deg,
                                                   std::int64_t self_int) {
  if (deg < 1) throw std::invalid_argument("enumerate_classes needs deg >= 1");
  std::vector<std::vector<std::int64_t>> raw;

  if (s.basis_kind() == BasisKind::quadric) {
    const std::int64_t bound = 1 + std::max(std::abs(deg), std::abs(self_int));
    for (std::int64_t x = -bound; x <= bound; ++x)
      for (std::int64_t y = -bound; y <= bound; ++y)
        if (2 * (x + y) == deg && 2 * x * y == self_int) raw.push_back({x, y});
  } else {
    const std::int64_t d = s.degree();
    if (d < 1) throw std::domain_error("class enumeration needs K^2 > 0");
    const auto r = static_cast<std::int64_t>(s.exceptional_count());
    // Quadratic d a^2 - 6 deg a + (deg^2 + r self) <= 0; quarter discriminant:
    const std::int64_t disc = 9 * deg * deg - d * (deg * deg + r * self_int);
    if (disc >= 0) {
      const auto root = detail::isqrt(disc);
      const std::int64_t lo = (3 * deg - root) / d - 2;
      const std::int64_t hi = (3 * deg + root) / d + 2;
      std::vector<std::int64_t> c(static_cast<std::size_t>(r + 1), 0);
      for (std::int64_t a = lo; a <= hi; ++a) {
        if (d * a * a - 6 * deg * a + deg * deg + r * self_int > 0) continue;
        c[0] = a;
        detail::fill_exceptional(c, 1, deg - 3 * a, a * a - self_int, raw);
      }
    }
  }

  std::vector<DivisorClass> out;
  out.reserve(raw.size());
  for (auto& v : raw) {
    DivisorClass c(s, std::move(v));
    if (arithmetic_genus(c) == 0 && degree_of(c) == deg && self_intersection(c) == self_int)
      out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// (-1)-curves: degree 1, self-intersection -1.
inline std::vector<DivisorClass> lines(const SurfaceModel& s) { return enumerate_classes(s, 1, -1); }

/// Pairwise intersection numbers of lines(s), in canonical order.
inline IntMatrix line_intersection_matrix(const SurfaceModel& s) {
  const auto ls = lines(s);
  IntMatrix m(ls.size(), ls.size());
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = 0; j < ls.size(); ++j) m(i, j) = intersect(ls[i], ls[j]);
  return m;
}

/// Integer matrix acting on coefficient vectors (column j is the image of
/// basis vector j).
class LatticeIsometry {
 public:
  explicit LatticeIsometry(IntMatrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("isometry must be square");
  }

  static LatticeIsometry identity(const SurfaceModel& s) {
    return LatticeIsometry(IntMatrix::identity(s.rank()));
  }

  /// Reflection c -> c - 2 (c.v)/(v.v) v. Requires 2/(v.v) to be an integer.
  static LatticeIsometry reflection(const DivisorClass& v) {
    const auto vv = self_intersection(v);
    if (vv == 0 || 2 % vv != 0)
      throw std::invalid_argument("reflection needs v.v in {-2,-1,1,2}");
    const auto factor = -2 / vv;
    const auto& s = v.surface();
    auto m = IntMatrix::identity(s.rank());
    for (std::size_t j = 0; j < s.rank(); ++j) {
      // (c.v) for c = basis j is (G v)_j.
      std::int64_t gv = 0;
      for (std::size_t k = 0; k < s.rank(); ++k) gv += s.gram(j, k) * v[k];
      for (std::size_t i = 0; i < s.rank(); ++i) m(i, j) += factor * gv * v[i];
    }
    return LatticeIsometry(std::move(m));
  }

  const IntMatrix& matrix() const { return matrix_; }
  std::size_t rank() const { return matrix_.rows(); }

  /// this after other.
  LatticeIsometry compose(const LatticeIsometry& other) const {
    return LatticeIsometry(matrix_ * other.matrix_);
  }

  bool preserves_form(const SurfaceModel& s) const {
    return rank() == s.rank() && matrix_.transposed() * s.gram_matrix() * matrix_ == s.gram_matrix();
  }

  bool fixes_canonical(const SurfaceModel& s) const;

  friend bool operator==(const LatticeIsometry&, const LatticeIsometry&) = default;

 private:
  IntMatrix matrix_;
};

inline DivisorClass apply_isometry(const LatticeIsometry& m, const DivisorClass& c) {
  if (m.rank() != c.size())
    throw std::invalid_argument("isometry of rank " + std::to_string(m.rank()) +
                                " applied to class of rank " + std::to_string(c.size()));
  std::vector<std::int64_t> out(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) out[i] += m.matrix()(i, j) * c[j];
  return DivisorClass(c.surface(), std::move(out));
}

inline bool LatticeIsometry::fixes_canonical(const SurfaceModel& s) const {
  const auto k = canonical_class(s);
  return rank() == s.rank() && apply_isometry(*this, k) == k;
}

}  // namespace delpezzo
