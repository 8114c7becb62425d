#pragma once

// Dense rational matrices with fraction-free (Bareiss) elimination.
//
// Every elimination first clears denominators row by row, so the Bareiss
// recurrence runs on integers and each division is exact. Entries of the
// echelon form after k pivots are k x k minors of the scaled input, which
// bounds coefficient growth.

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "ampli/error.hpp"
#include "ampli/rational.hpp"

namespace ampli {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ValidationError("ragged matrix literal");
      for (const auto& x : r) entries_.push_back(x);
    }
  }

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw ValidationError("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  QVector row(std::size_t r) const {
    return QVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  QMatrix transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Submatrix on the given row and column index lists.
  QMatrix select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    QMatrix s(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs[i], cs[j]);
    return s;
  }

  QVector apply(const QVector& v) const {
    if (v.size() != cols_) throw ValidationError("matrix-vector dimension mismatch");
    QVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Rat acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
      out[i] = acc;
    }
    return out;
  }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw ValidationError("matrix product dimension mismatch");
    QMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

/// Integer row-echelon form produced by Bareiss elimination.
struct Echelon {
  std::vector<std::vector<Int>> rows;  // only the first rank() rows are nonzero
  std::vector<std::size_t> pivots;     // pivot column of each nonzero row
  int swap_sign = 1;
  std::size_t rank() const { return pivots.size(); }
};

inline Echelon bareiss_echelon(const QMatrix& m) {
  Echelon e;
  const std::size_t nr = m.rows(), nc = m.cols();
  e.rows.assign(nr, std::vector<Int>(nc));
  for (std::size_t i = 0; i < nr; ++i) {
    const QVector r = m.row(i);
    const Int l = common_denominator(r);
    for (std::size_t j = 0; j < nc; ++j) e.rows[i][j] = r[j].get_num() * (l / r[j].get_den());
  }
  auto& a = e.rows;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      e.swap_sign = -e.swap_sign;
    }
    const Int& piv = a[r][c];
    for (std::size_t i = r + 1; i < nr; ++i) {
      const Int lead = a[i][c];
      for (std::size_t j = c + 1; j < nc; ++j) {
        Int v = piv * a[i][j];
        if (lead != 0) v -= lead * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

inline std::size_t rank(const QMatrix& m) { return bareiss_echelon(m).rank(); }

/// Basis of the right null space, each vector scaled to a primitive integer
/// vector. Empty when the matrix has full column rank.
inline std::vector<QVector> kernel(const QMatrix& m) {
  const Echelon e = bareiss_echelon(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    QVector x(nc);
    x[f] = 1;
    for (std::size_t k = e.rank(); k-- > 0;) {
      const std::size_t pc = e.pivots[k];
      Rat acc = 0;
      for (std::size_t j = pc + 1; j < nc; ++j)
        if (x[j] != 0 && e.rows[k][j] != 0) acc += Rat(e.rows[k][j]) * x[j];
      x[pc] = -acc / Rat(e.rows[k][pc]);
    }
    basis.push_back(primitive(x));
  }
  return basis;
}

inline Rat det(const QMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Denominators were cleared per row; undo that scaling afterwards.
  Rat scale = 1;
  for (std::size_t i = 0; i < n; ++i) scale *= Rat(common_denominator(m.row(i)));
  const Echelon e = bareiss_echelon(m);
  if (e.rank() < n) return 0;
  return Rat(e.rows[n - 1][n - 1]) * e.swap_sign / scale;
}

inline Rat det4(const QMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw ValidationError("det4 expects a 4x4 matrix");
  return det(m);
}

/// Solves m x = b exactly. Returns false if the system is inconsistent;
/// otherwise x is one particular solution (free variables set to zero).
inline bool solve(const QMatrix& m, const QVector& b, QVector& x) {
  if (b.size() != m.rows()) throw ValidationError("right-hand side length mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = -b[i];
  }
  // Homogenize: a kernel vector of [m | -b] with last entry 1 solves m x = b.
  const auto ker = kernel(aug);
  for (const auto& v : ker) {
    if (v.back() != 0) {
      x.assign(m.cols(), 0);
      for (std::size_t j = 0; j < m.cols(); ++j) x[j] = v[j] / v.back();
      return true;
    }
  }
  return false;
}

}  // namespace ampli
