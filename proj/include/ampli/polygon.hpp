#pragma once

// Adjoint curve of a convex polygon in the affine plane. Points and lines
// are homogeneous triples over (x, y, w).

#include <array>
#include <vector>

#include "ampli/error.hpp"
#include "ampli/matrix.hpp"
#include "ampli/poly.hpp"

namespace ampli {

using Vec3 = std::array<Rat, 3>;

struct Point2 {
  Rat x, y;
};

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Rat dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Vec3 homog(const Point2& p) { return {p.x, p.y, Rat(1)}; }

/// Vertices in cyclic order, at least three, strictly convex.
inline void check_convex(const std::vector<Point2>& v) {
  if (v.size() < 3) throw ValidationError("a polygon needs at least 3 vertices");
  int orient = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto& a = v[k];
    const auto& b = v[(k + 1) % v.size()];
    const auto& c = v[(k + 2) % v.size()];
    const int s = sign((b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x));
    if (s == 0) throw ValidationError("polygon has collinear consecutive vertices");
    if (orient != 0 && s != orient) throw ValidationError("polygon is not convex");
    orient = s;
  }
}

/// Edge k joins vertex k to vertex k+1. Each line is a primitive integer
/// form that is positive on the interior.
inline std::vector<Vec3> edge_lines(const std::vector<Point2>& v) {
  check_convex(v);
  Rat cx = 0, cy = 0;
  for (const auto& p : v) {
    cx += p.x;
    cy += p.y;
  }
  const Vec3 centroid{cx / static_cast<long>(v.size()), cy / static_cast<long>(v.size()), Rat(1)};
  std::vector<Vec3> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Vec3 l = cross(homog(v[k]), homog(v[(k + 1) % v.size()]));
    QVector q = primitive(QVector(l.begin(), l.end()));
    if (dot3({q[0], q[1], q[2]}, centroid) < 0)
      for (auto& x : q) x = -x;
    out.push_back({q[0], q[1], q[2]});
  }
  return out;
}

/// Intersections of non-adjacent edge lines (possibly at infinity).
inline std::vector<Vec3> residual_points(const std::vector<Point2>& v) {
  const auto lines = edge_lines(v);
  const std::size_t m = lines.size();
  std::vector<Vec3> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      out.push_back(cross(lines[i], lines[j]));
    }
  return out;
}

inline std::vector<Exponent> plane_monomials(unsigned d) {
  std::vector<Exponent> out;
  for (unsigned a = d + 1; a-- > 0;)
    for (unsigned b = d - a + 1; b-- > 0;) {
      Exponent e{};
      e[0] = static_cast<std::uint16_t>(a);
      e[1] = static_cast<std::uint16_t>(b);
      e[2] = static_cast<std::uint16_t>(d - a - b);
      out.push_back(e);
    }
  return out;
}

/// The unique curve of degree (#edges - 3) through the residual points, as a
/// form in (x, y, w) with first coefficient in descending order equal to 1.
inline PolyQ polygon_adjoint_2d(const std::vector<Point2>& vertices) {
  const auto pts = residual_points(vertices);
  const unsigned d = static_cast<unsigned>(vertices.size() - 3);
  const auto mons = plane_monomials(d);
  std::vector<QVector> rows;
  for (const auto& p : pts) {
    QVector r;
    for (const auto& e : mons) {
      Rat acc = 1;
      for (std::size_t i = 0; i < 3; ++i)
        for (unsigned k = 0; k < e[i]; ++k) acc *= p[i];
      r.push_back(acc);
    }
    rows.push_back(std::move(r));
  }
  const auto ker = kernel(QMatrix::from_rows(rows, mons.size()));
  if (ker.size() != 1) throw ClaimError("planar adjoint interpolation has kernel dimension " + std::to_string(ker.size()));
  PolyQ out(3);
  Rat lead = 0;
  for (std::size_t k = 0; k < mons.size(); ++k) {
    if (ker[0][k] == 0) continue;
    if (lead == 0) lead = ker[0][k];
    out.add_term(mons[k], ker[0][k] / lead);
  }
  return out;
}

/// f(x, y, 1) as a polynomial in (x, y).
inline PolyQ dehomogenize(const PolyQ& f) {
  const std::array<PolyQ, 3> vals{PolyQ::variable(2, 0), PolyQ::variable(2, 1), PolyQ(2, Rat(1))};
  return substitute<PolyQ>(f, std::span<const PolyQ>(vals.data(), 3), PolyQ(2, Rat(1)));
}

}  // namespace ampli
