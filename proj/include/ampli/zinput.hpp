#pragma once

// The n x 4 matrix Z whose rows are the points Z_1..Z_n in P^3.

#include <atomic>
#include <string>
#include <vector>

#include "ampli/combinatorics.hpp"
#include "ampli/error.hpp"
#include "ampli/grassmann.hpp"
#include "ampli/matrix.hpp"
#include "ampli/parallel.hpp"

namespace ampli {

/// True iff every minor of every size with increasing row and column indices
/// is strictly positive.
inline bool check_totally_positive(const QMatrix& m) {
  const int r = static_cast<int>(m.rows()), c = static_cast<int>(m.cols());
  for (int k = 1; k <= std::min(r, c); ++k) {
    const auto rsets = subsets(r, k), csets = subsets(c, k);
    for (const auto& rs : rsets)
      for (const auto& cs : csets) {
        const std::vector<std::size_t> ri(rs.begin(), rs.end()), ci(cs.begin(), cs.end());
        if (det(m.select(ri, ci)) <= 0) return false;
      }
  }
  return true;
}

/// Plucker vector of the cyclic edge line for index i (1-based): Z_i v Z_{i+1}
/// for i < n and Z_1 v Z_n for i = n, so that pairing with it gives the
/// bracket <AB i(i+1)> with the convention <AB n(n+1)> = <AB 1n>.
inline Plk6<Rat> cyclic_edge(const QMatrix& m, int i) {
  const int n = static_cast<int>(m.rows());
  i = cyc(i, n);
  auto row = [&](int k) {
    const auto r = static_cast<std::size_t>(k - 1);
    return Vec4<Rat>{m(r, 0), m(r, 1), m(r, 2), m(r, 3)};
  };
  return i < n ? join(row(i), row(i + 1)) : join(row(1), row(n));
}

/// False iff some line meets five of the n cyclic edge lines. Complex lines
/// count: a solution space of projective dimension >= 1 always meets the
/// Plucker quadric over C.
inline bool check_genericity(const QMatrix& m) {
  const int n = static_cast<int>(m.rows());
  if (n < 5) return true;
  std::vector<LinearForm6> forms;
  for (int i = 1; i <= n; ++i) forms.push_back(meets_line_condition(cyclic_edge(m, i)));
  const auto sets = subsets(n, 5);
  std::atomic<bool> ok{true};
  parallel_for(sets.size(), [&](std::size_t s) {
    if (!ok) return;
    QMatrix a(5, 6);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t k = 0; k < 6; ++k) a(r, k) = forms[static_cast<std::size_t>(sets[s][r])][k];
    const auto ker = kernel(a);
    if (ker.size() >= 2) {
      ok = false;
    } else if (ker.size() == 1) {
      Plk6<Rat> p;
      std::copy(ker[0].begin(), ker[0].end(), p.begin());
      if (plucker_relation(p) == 0) ok = false;
    }
  });
  return ok;
}

class ZMatrix {
 public:
  ZMatrix() = default;
  explicit ZMatrix(QMatrix m) : m_(std::move(m)) {
    if (m_.cols() != 4) throw ValidationError("Z must have 4 columns");
    if (m_.rows() < 4) throw ValidationError("Z must have at least 4 rows");
    totally_positive_ = check_totally_positive(m_);
    generic_ = check_genericity(m_);
  }

  int n() const { return static_cast<int>(m_.rows()); }
  const QMatrix& matrix() const { return m_; }
  bool totally_positive() const { return totally_positive_; }
  bool generic() const { return generic_; }

  /// Z_i with cyclic 1-based index.
  PointP3 point(int i) const {
    const auto r = static_cast<std::size_t>(cyc(i, n()) - 1);
    return PointP3{{m_(r, 0), m_(r, 1), m_(r, 2), m_(r, 3)}};
  }
  Plk6<Rat> edge(int i) const { return cyclic_edge(m_, i); }
  Plk6<Rat> line(int i, int j) const { return join(point(i).v, point(j).v); }
  PlaneP3 plane(int i, int j, int k) const { return plane_through(point(i), point(j), point(k)); }

  /// <AB i(i+1)> in the cyclic convention.
  Rat cyclic_bracket(const Pluecker& ab, int i) const { return pairing(ab.coords(), edge(i)); }
  /// <AB ij> = det(A, B, Z_i, Z_j).
  Rat bracket(const Pluecker& ab, int i, int j) const { return pairing(ab.coords(), line(i, j)); }

  /// The 4x4 minor <ijkl> of Z (rows in the given order).
  Rat minor4(int i, int j, int k, int l) const {
    QMatrix s(4, 4);
    const int idx[4] = {i, j, k, l};
    for (std::size_t a = 0; a < 4; ++a) {
      const PointP3 z = point(idx[a]);
      for (std::size_t b = 0; b < 4; ++b) s(a, b) = z.v[b];
    }
    return det4(s);
  }

  /// Throws ValidationError unless Z is totally positive and generic.
  void require_valid() const {
    if (!totally_positive_) throw ValidationError("Z is not totally positive");
    if (!generic_) throw ValidationError("Z is not generic: some line meets five cyclic edge lines");
  }

 private:
  QMatrix m_;
  bool totally_positive_ = false;
  bool generic_ = false;
};

/// Rows (1, t, t^2, t^3) at strictly increasing positive nodes.
inline ZMatrix moment_curve_z(const std::vector<Rat>& nodes) {
  if (nodes.size() < 4) throw ValidationError("need at least 4 nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] <= 0) throw ValidationError("nodes must be positive");
    if (i > 0 && nodes[i] <= nodes[i - 1]) throw ValidationError("nodes must be strictly increasing");
  }
  QMatrix m(nodes.size(), 4);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Rat p = 1;
    for (std::size_t j = 0; j < 4; ++j, p *= nodes[i]) m(i, j) = p;
  }
  return ZMatrix(std::move(m));
}

/// Moment curve at nodes 1..n.
inline ZMatrix moment_curve_z(int n) {
  std::vector<Rat> nodes;
  for (int i = 1; i <= n; ++i) nodes.emplace_back(i);
  return moment_curve_z(nodes);
}

}  // namespace ampli
