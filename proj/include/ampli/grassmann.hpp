#pragma once

// Lines in P^3 as points of Gr(2,4) in P^5.
//
// Coordinate order is (p12, p13, p14, p23, p24, p34), index 0..5. The index
// of the complementary pair of k is 5 - k, and
//
//     kSign = (+1, -1, +1, +1, -1, +1)
//
// is both the sign of p_k * q_{5-k} in the bracket pairing and the
// permutation sign eps(i, j, k, l) of a pair followed by its complement.
// Hence
//
//     pairing(P, Q)      = sum_k kSign[k] * P[k] * Q[5 - k]
//                        = det(A, B, C, D) for P = A v B, Q = C v D,
//     Pluecker relation  = pairing(P, P) / 2 = p12 p34 - p13 p24 + p14 p23,
//     dual(P)[k]         = kSign[k] * P[5 - k]   (Hodge star, an involution).
//
// The join/meet helpers are templates over the scalar ring so that the same
// code produces exact points (Rat) and polynomial curve parametrizations
// (UPoly).

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ampli/error.hpp"
#include "ampli/matrix.hpp"
#include "ampli/poly.hpp"
#include "ampli/rational.hpp"

namespace ampli {

template <class T>
using Vec4 = std::array<T, 4>;
template <class T>
using Plk6 = std::array<T, 6>;

inline constexpr std::array<std::pair<int, int>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
inline constexpr std::array<int, 6> kSign{1, -1, 1, 1, -1, 1};

/// Index 0..5 of the (0-based) coordinate pair {a, b}, a != b.
constexpr int pair_index(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int k = 0; k < 6; ++k)
    if (kPairs[static_cast<std::size_t>(k)].first == a && kPairs[static_cast<std::size_t>(k)].second == b) return k;
  return -1;
}

template <class T>
T zero_like(const T& x) {
  return x * Rat(0);
}

// ---------------------------------------------------------------------------
// Generic exterior algebra on P^3.

/// Line through two points: the 2x2 minors of the matrix with rows a, b.
template <class T>
Plk6<T> join(const Vec4<T>& a, const Vec4<T>& b) {
  Plk6<T> p;
  for (std::size_t k = 0; k < 6; ++k) {
    const auto [i, j] = kPairs[k];
    p[k] = a[i] * b[j] - a[j] * b[i];
  }
  return p;
}

template <class T>
T pairing(const Plk6<T>& p, const Plk6<T>& q) {
  T acc = p[0] * q[5];
  acc = acc - p[1] * q[4];
  acc = acc + p[2] * q[3];
  acc = acc + p[3] * q[2];
  acc = acc - p[4] * q[1];
  acc = acc + p[5] * q[0];
  return acc;
}

template <class T>
Plk6<T> dual(const Plk6<T>& p) {
  Plk6<T> d;
  for (std::size_t k = 0; k < 6; ++k) d[k] = kSign[k] > 0 ? T(p[5 - k]) : T(zero_like(p[5 - k]) - p[5 - k]);
  return d;
}

/// Entry (i, j) of the primal antisymmetric matrix A B^T - B A^T.
template <class T>
T primal_entry(const Plk6<T>& p, int i, int j) {
  if (i == j) return zero_like(p[0]);
  const auto& v = p[static_cast<std::size_t>(pair_index(i, j))];
  return i < j ? T(v) : T(zero_like(v) - v);
}

/// Plane spanned by a line and a point: the covector w -> det(A, B, z, w).
template <class T>
Vec4<T> join(const Plk6<T>& line, const Vec4<T>& z) {
  // det(A,B,z,w) = pairing(P, z v w); its coefficient on w_l is
  // sum_{i != l} dual(P)_{il} z_i with the sign of (i, l) in z v e_l.
  const Plk6<T> d = dual(line);
  Vec4<T> h;
  for (int l = 0; l < 4; ++l) {
    T acc = zero_like(line[0]);
    for (int i = 0; i < 4; ++i) {
      if (i == l) continue;
      // (z v e_l)_{(i,l)} = z_i if i < l, -z_i if i > l; pairing picks dual.
      const T term = primal_entry(d, i, l) * z[static_cast<std::size_t>(i)];
      acc = acc + term;
    }
    h[static_cast<std::size_t>(l)] = acc;
  }
  return h;
}

/// Line cut out by two planes.
template <class T>
Plk6<T> meet(const Vec4<T>& h1, const Vec4<T>& h2) {
  return dual(join(h1, h2));
}

/// Point where a line meets a plane: (A B^T - B A^T) h = A (B.h) - B (A.h).
template <class T>
Vec4<T> meet(const Plk6<T>& line, const Vec4<T>& h) {
  Vec4<T> x;
  for (int i = 0; i < 4; ++i) {
    T acc = zero_like(line[0]);
    for (int j = 0; j < 4; ++j)
      if (i != j) acc = acc + primal_entry(line, i, j) * h[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = acc;
  }
  return x;
}

template <class T>
T plucker_relation(const Plk6<T>& p) {
  return p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
}

// ---------------------------------------------------------------------------
// Exact value types.

struct PointP3 {
  Vec4<Rat> v;
};
struct PlaneP3 {
  Vec4<Rat> h;
};

template <std::size_t N>
bool all_zero(const std::array<Rat, N>& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

/// a and b are nonzero and proportional.
template <std::size_t N>
bool projectively_equal(const std::array<Rat, N>& a, const std::array<Rat, N>& b) {
  if (all_zero(a) || all_zero(b)) return false;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

class Pluecker {
 public:
  Pluecker() = default;
  explicit Pluecker(const Plk6<Rat>& p) : p_(p) {
    if (all_zero(p_)) throw ValidationError("Pluecker vector is zero");
    if (plucker_relation(p_) != 0) throw ValidationError("vector violates the Pluecker relation");
  }
  Pluecker(std::initializer_list<Rat> p) {
    if (p.size() != 6) throw ValidationError("Pluecker vector needs 6 entries");
    std::size_t k = 0;
    for (const auto& x : p) p_[k++] = x;
    *this = Pluecker(p_);
  }

  const Plk6<Rat>& coords() const { return p_; }
  const Rat& operator[](std::size_t k) const { return p_[k]; }

  friend bool projectively_equal(const Pluecker& a, const Pluecker& b) { return projectively_equal(a.p_, b.p_); }
  friend bool operator==(const Pluecker& a, const Pluecker& b) { return a.p_ == b.p_; }

  /// Representative scaled to a primitive integer vector (sign preserved).
  Pluecker normalized() const {
    const QVector v = primitive(QVector(p_.begin(), p_.end()));
    Plk6<Rat> q;
    std::copy(v.begin(), v.end(), q.begin());
    Pluecker out;
    out.p_ = q;
    return out;
  }

 private:
  Plk6<Rat> p_{};
};

inline Pluecker pluecker_from_matrix(const QMatrix& x) {
  if (x.rows() != 2 || x.cols() != 4) throw ValidationError("pluecker_from_matrix expects a 2x4 matrix");
  const Vec4<Rat> a{x(0, 0), x(0, 1), x(0, 2), x(0, 3)};
  const Vec4<Rat> b{x(1, 0), x(1, 1), x(1, 2), x(1, 3)};
  const auto p = join(a, b);
  if (all_zero(p)) throw ValidationError("matrix has rank < 2");
  return Pluecker(p);
}

inline Pluecker line_through(const PointP3& a, const PointP3& b) {
  const auto p = join(a.v, b.v);
  if (all_zero(p)) throw ValidationError("line_through: points coincide projectively");
  return Pluecker(p);
}

inline PlaneP3 plane_through(const Pluecker& line, const PointP3& z) {
  PlaneP3 h{join(line.coords(), z.v)};
  if (all_zero(h.h)) throw ValidationError("plane_through: point lies on the line");
  return h;
}

inline PlaneP3 plane_through(const PointP3& a, const PointP3& b, const PointP3& c) {
  return plane_through(line_through(a, b), c);
}

inline Pluecker intersect(const PlaneP3& h1, const PlaneP3& h2) {
  const auto p = meet(h1.h, h2.h);
  if (all_zero(p)) throw ValidationError("intersect: planes coincide");
  return Pluecker(p);
}

inline PointP3 intersect(const Pluecker& line, const PlaneP3& h) {
  PointP3 x{meet(line.coords(), h.h)};
  if (all_zero(x.v)) throw ValidationError("intersect: line lies in the plane");
  return x;
}

/// <AB ij> = det(A, B, Z_i, Z_j).
inline Rat bracket(const Pluecker& ab, const PointP3& zi, const PointP3& zj) {
  return pairing(ab.coords(), join(zi.v, zj.v));
}

inline bool incident(const PointP3& z, const PlaneP3& h) {
  Rat acc = 0;
  for (std::size_t i = 0; i < 4; ++i) acc += z.v[i] * h.h[i];
  return acc == 0;
}

// ---------------------------------------------------------------------------
// Schubert incidence conditions as linear forms on P^5.

using LinearForm6 = std::array<Rat, 6>;

inline Rat apply(const LinearForm6& f, const Plk6<Rat>& p) {
  Rat acc = 0;
  for (std::size_t k = 0; k < 6; ++k) acc += f[k] * p[k];
  return acc;
}

/// L: the line meets the fixed line q. One linear form, p -> pairing(p, q).
inline LinearForm6 meets_line_condition(const Plk6<Rat>& q) {
  LinearForm6 f;
  for (std::size_t k = 0; k < 6; ++k) f[k] = kSign[k] * q[5 - k];
  return f;
}

/// Drops the one dependent row among four rows r_0..r_3 satisfying
/// sum_l w_l r_l = 0, choosing the first l with w_l != 0.
inline std::vector<LinearForm6> drop_dependent(std::array<LinearForm6, 4> rows, const Vec4<Rat>& w) {
  std::vector<LinearForm6> out;
  bool dropped = false;
  for (std::size_t l = 0; l < 4; ++l) {
    if (!dropped && w[l] != 0) {
      dropped = true;
      continue;
    }
    out.push_back(rows[l]);
  }
  return out;
}

/// V: the line contains z. Rows are the components of P* z (dual Pluecker
/// matrix times z); they satisfy one relation, so three are kept.
inline std::vector<LinearForm6> contains_point_conditions(const PointP3& z) {
  std::array<LinearForm6, 4> rows{};
  for (int l = 0; l < 4; ++l) {
    // row_l(p) = det(A, B, z, e_l) = sum_k kSign[k] p_k (z v e_l)_{5-k}
    Vec4<Rat> e{};
    e[static_cast<std::size_t>(l)] = 1;
    rows[static_cast<std::size_t>(l)] = meets_line_condition(join(z.v, e));
  }
  return drop_dependent(rows, z.v);
}

/// P: the line lies in the plane h. Rows are the components of P h.
inline std::vector<LinearForm6> in_plane_conditions(const PlaneP3& h) {
  std::array<LinearForm6, 4> rows{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      const int k = pair_index(i, j);
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] += (i < j ? 1 : -1) * h.h[static_cast<std::size_t>(j)];
    }
  return drop_dependent(rows, h.h);
}

struct IncidenceResult {
  std::vector<LinearForm6> conditions;
  bool holds = false;
};

inline IncidenceResult line_contains_point(const Pluecker& ab, const PointP3& z) {
  IncidenceResult r{contains_point_conditions(z), true};
  for (const auto& f : r.conditions) r.holds = r.holds && apply(f, ab.coords()) == 0;
  return r;
}

inline IncidenceResult line_in_plane(const Pluecker& ab, const PlaneP3& h) {
  IncidenceResult r{in_plane_conditions(h), true};
  for (const auto& f : r.conditions) r.holds = r.holds && apply(f, ab.coords()) == 0;
  return r;
}

// ---------------------------------------------------------------------------
// Standard affine charts {p_k = 1}.

class Chart {
 public:
  /// Chart of the pivot coordinate p_{ij}, 1-based indices.
  Chart(int i, int j) : pivot_(pair_index(i - 1, j - 1)) {
    if (i == j || i < 1 || j < 1 || i > 4 || j > 4) throw ValidationError("invalid chart pivot");
  }
  static Chart from_index(int k) {
    Chart c(1, 2);
    if (k < 0 || k > 5) throw ValidationError("invalid chart index");
    c.pivot_ = k;
    return c;
  }

  int pivot() const { return pivot_; }
  int dependent() const { return 5 - pivot_; }
  std::pair<int, int> pivot_pair() const {
    const auto [a, b] = kPairs[static_cast<std::size_t>(pivot_)];
    return {a + 1, b + 1};
  }
  std::string name() const {
    const auto [a, b] = pivot_pair();
    return "p" + std::to_string(a) + std::to_string(b);
  }
  /// Plucker indices of the four free chart coordinates, in index order.
  std::array<int, 4> free_indices() const {
    std::array<int, 4> f{};
    std::size_t n = 0;
    for (int k = 0; k < 6; ++k)
      if (k != pivot_ && k != 5 - pivot_) f[n++] = k;
    return f;
  }

  /// Pluecker vector of the chart point with the given coordinates; the
  /// dependent entry comes from the Pluecker relation.
  template <class T>
  Plk6<T> embed(const Vec4<T>& x, const T& one) const {
    Plk6<T> p;
    const auto f = free_indices();
    for (std::size_t m = 0; m < 4; ++m) p[static_cast<std::size_t>(f[m])] = x[m];
    p[static_cast<std::size_t>(pivot_)] = one;
    // kSign[r] p_k p_{5-k} + (other two pairs) = 0, with p_pivot = 1.
    const int r = std::min(pivot_, 5 - pivot_);
    T rest = zero_like(one);
    for (int s = 0; s < 3; ++s) {
      if (s == r) continue;
      rest = rest + p[static_cast<std::size_t>(s)] * p[static_cast<std::size_t>(5 - s)] * Rat(kSign[static_cast<std::size_t>(s)]);
    }
    p[static_cast<std::size_t>(5 - pivot_)] = rest * Rat(-kSign[static_cast<std::size_t>(r)]);
    return p;
  }

  friend bool operator==(const Chart& a, const Chart& b) { return a.pivot_ == b.pivot_; }

 private:
  int pivot_ = 0;
};

inline bool in_chart(const Pluecker& ab, const Chart& c) { return ab[static_cast<std::size_t>(c.pivot())] != 0; }

inline Vec4<Rat> chart_coords(const Pluecker& ab, const Chart& c) {
  const Rat& piv = ab[static_cast<std::size_t>(c.pivot())];
  if (piv == 0) throw ValidationError("point is not in chart " + c.name());
  Vec4<Rat> x;
  const auto f = c.free_indices();
  for (std::size_t m = 0; m < 4; ++m) x[m] = ab[static_cast<std::size_t>(f[m])] / piv;
  return x;
}

inline Pluecker chart_point(const Vec4<Rat>& x, const Chart& c) { return Pluecker(c.embed<Rat>(x, Rat(1))); }

/// The six Pluecker coordinates as polynomials in the four chart variables.
inline Plk6<PolyQ> chart_polynomials(const Chart& c) {
  Vec4<PolyQ> vars;
  for (std::size_t m = 0; m < 4; ++m) vars[m] = PolyQ::variable(4, m);
  return c.embed<PolyQ>(vars, PolyQ(4, Rat(1)));
}

inline std::array<Chart, 6> all_charts() {
  return {Chart::from_index(0), Chart::from_index(1), Chart::from_index(2),
          Chart::from_index(3), Chart::from_index(4), Chart::from_index(5)};
}

}  // namespace ampli
