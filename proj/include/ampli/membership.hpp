#pragma once

// The amplituhedron map X -> X.Z, the sign-flip test for the open part, and
// explicit nonnegative 2 x n matrices whose images land on prescribed
// boundary strata.

#include <optional>
#include <string>
#include <vector>

#include "ampli/combinatorics.hpp"
#include "ampli/error.hpp"
#include "ampli/grassmann.hpp"
#include "ampli/matrix.hpp"
#include "ampli/zinput.hpp"

namespace ampli {

inline Pluecker amplituhedron_map(const QMatrix& x, const ZMatrix& z) {
  if (x.rows() != 2 || static_cast<int>(x.cols()) != z.n())
    throw ValidationError("amplituhedron_map expects a 2 x n matrix");
  const QMatrix y = x * z.matrix();
  if (all_zero(join(Vec4<Rat>{y(0, 0), y(0, 1), y(0, 2), y(0, 3)}, Vec4<Rat>{y(1, 0), y(1, 1), y(1, 2), y(1, 3)})))
    throw ValidationError("X.Z has rank < 2");
  return pluecker_from_matrix(y);
}

/// Sign alternations among the nonzero entries.
inline int sign_flip_count(const std::vector<Rat>& values) {
  int flips = 0, last = 0;
  for (const auto& v : values) {
    const int s = sign(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++flips;
    last = s;
  }
  return flips;
}

enum class Certificate { strict_member, opposite_sign_certificate, flip_violation, inconclusive_boundary };

inline std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::strict_member: return "strict_member";
    case Certificate::opposite_sign_certificate: return "opposite_sign_certificate";
    case Certificate::flip_violation: return "flip_violation";
    case Certificate::inconclusive_boundary: return "inconclusive_boundary";
  }
  return "?";
}

struct MembershipVerdict {
  bool in_open_part = false;
  std::vector<int> cyclic_signs;  // normalized so that <AB12> >= 0 where possible
  int flip_count = 0;
  Certificate certificate = Certificate::inconclusive_boundary;
};

inline MembershipVerdict membership_open(const Pluecker& ab, const ZMatrix& z) {
  const int n = z.n();
  std::vector<Rat> cyclic, flips;
  for (int i = 1; i <= n; ++i) cyclic.push_back(z.cyclic_bracket(ab, i));
  for (int j = 2; j <= n; ++j) flips.push_back(z.bracket(ab, 1, j));

  MembershipVerdict v;
  v.flip_count = sign_flip_count(flips);

  int global = 0;
  for (const auto& c : cyclic)
    if (sign(c) != 0) {
      global = sign(c);
      break;
    }
  for (const auto& c : cyclic) v.cyclic_signs.push_back(global == 0 ? 0 : sign(c) * global);

  bool has_pos = false, has_neg = false, has_zero = false;
  for (const auto& c : cyclic) {
    has_pos = has_pos || c > 0;
    has_neg = has_neg || c < 0;
    has_zero = has_zero || c == 0;
  }
  bool flip_seq_zero = false;
  for (const auto& f : flips) flip_seq_zero = flip_seq_zero || f == 0;

  if (has_pos && has_neg) {
    v.certificate = Certificate::opposite_sign_certificate;
  } else if (!has_zero && v.flip_count == 2) {
    v.in_open_part = true;
    v.certificate = Certificate::strict_member;
  } else if (!flip_seq_zero && v.flip_count != 2) {
    v.certificate = Certificate::flip_violation;
  } else {
    v.certificate = Certificate::inconclusive_boundary;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Positroid cell witnesses.

/// Circular column shift to the right with the wrapped column negated.
inline QMatrix sigma(const QMatrix& x) {
  const std::size_t n = x.cols();
  QMatrix y(x.rows(), n);
  for (std::size_t r = 0; r < x.rows(); ++r) {
    y(r, 0) = -x(r, n - 1);
    for (std::size_t c = 1; c < n; ++c) y(r, c) = x(r, c - 1);
  }
  return y;
}

inline QMatrix sigma_power(QMatrix x, int k) {
  for (int i = 0; i < k; ++i) x = sigma(x);
  return x;
}

enum class CellTag { interior, facet, plane_I, plane_II, quadric_III, line_I, line_II };

inline std::string to_string(CellTag t) {
  switch (t) {
    case CellTag::interior: return "interior";
    case CellTag::facet: return "facet";
    case CellTag::plane_I: return "plane-I";
    case CellTag::plane_II: return "plane-II";
    case CellTag::quadric_III: return "quadric-III";
    case CellTag::line_I: return "line-I";
    case CellTag::line_II: return "line-II";
  }
  return "?";
}

inline CellTag parse_cell_tag(const std::string& s) {
  for (auto t : {CellTag::interior, CellTag::facet, CellTag::plane_I, CellTag::plane_II, CellTag::quadric_III,
                 CellTag::line_I, CellTag::line_II})
    if (to_string(t) == s) return t;
  throw ValidationError("unknown cell tag: " + s);
}

/// Number of free parameters of each family.
inline std::size_t cell_param_count(CellTag t, int n) {
  switch (t) {
    case CellTag::interior: return static_cast<std::size_t>(n);
    case CellTag::facet: return 3;
    case CellTag::plane_I:
    case CellTag::plane_II:
    case CellTag::quadric_III: return 2;
    case CellTag::line_I:
    case CellTag::line_II: return 1;
  }
  return 0;
}

struct CellSample {
  QMatrix x;
  CellTag tag = CellTag::interior;
  std::vector<int> indices;
  std::vector<Rat> params;
};

/// Samples of the cell families. Indices are 1-based.
///   interior            rows (1..1) and partial sums of the n params
///   facet(i)            <AB i(i+1)> = 0
///   plane-I(i)          lines through Z_i
///   plane-II(i)         lines in the plane Z_{i-1} Z_i Z_{i+1}
///   quadric-III(i,j)    lines meeting Z_iZ_{i+1} and Z_jZ_{j+1}
///   line-I(i)           lines through Z_i meeting Z_{i-1}Z_{i+1}
///   line-II(i,j)        lines through Z_i meeting Z_jZ_{j+1}
inline CellSample cell_sample(CellTag tag, std::vector<int> indices, const std::vector<Rat>& params, int n) {
  if (n < 4) throw ValidationError("cell_sample needs n >= 4");
  if (params.size() != cell_param_count(tag, n))
    throw ValidationError(to_string(tag) + " expects " + std::to_string(cell_param_count(tag, n)) + " parameters");
  for (const auto& p : params)
    if (p <= 0) throw ValidationError("cell parameters must be positive");
  const std::size_t need = tag == CellTag::interior ? 0 : (tag == CellTag::quadric_III || tag == CellTag::line_II) ? 2 : 1;
  if (indices.size() != need) throw ValidationError(to_string(tag) + " expects " + std::to_string(need) + " indices");
  for (int& i : indices) {
    if (i < 1 || i > n) throw ValidationError("cell index out of range");
  }

  const auto N = static_cast<std::size_t>(n);
  QMatrix x(2, N);
  CellSample s{x, tag, indices, params};
  switch (tag) {
    case CellTag::interior: {
      Rat acc = 0;
      for (std::size_t c = 0; c < N; ++c) {
        acc += params[c];
        x(0, c) = 1;
        x(1, c) = acc;
      }
      break;
    }
    case CellTag::facet:
      x(0, 0) = 1;
      x(0, 1) = params[0];
      x(1, 1) = params[1];
      x(1, 2) = params[2];
      x(1, 3) = 1;
      x = sigma_power(x, indices[0] - 1);
      break;
    case CellTag::plane_I:
      x(0, 1) = 1;
      x(0, 2) = params[0];
      x(0, 3) = params[1];
      x(1, 0) = -1;
      x = sigma_power(x, indices[0] - 1);
      break;
    case CellTag::plane_II:
      x(0, 0) = params[0];
      x(0, N - 1) = -1;
      x(1, 0) = params[1];
      x(1, 1) = 1;
      x = sigma_power(x, indices[0] - 1);
      break;
    case CellTag::quadric_III: {
      int i = indices[0], j = indices[1];
      if (i > j) std::swap(i, j);
      if (j - i < 2 || (i == 1 && j == n)) throw ValidationError("quadric-III needs disjoint edges");
      const auto ci = static_cast<std::size_t>(i - 1), cj = static_cast<std::size_t>(j - 1);
      x(0, ci) = 1;
      x(0, ci + 1) = params[0];
      if (j < n) {
        x(1, cj) = params[1];
        x(1, cj + 1) = 1;
      } else {
        x(1, 0) = -1;
        x(1, N - 1) = params[1];
      }
      s.indices = {i, j};
      break;
    }
    case CellTag::line_I:
      x(0, 0) = 1;
      x(1, 1) = params[0];
      x(1, N - 1) = 1;
      x = sigma_power(x, indices[0] - 1);
      break;
    case CellTag::line_II: {
      const int i = indices[0], j = indices[1];
      if (i == j || i == cyc(j + 1, n)) throw ValidationError("line-II needs i outside {j, j+1}");
      const int jp = cyc(j - i + 1, n);
      x(0, 0) = 1;
      x(1, static_cast<std::size_t>(jp - 1)) = 1;
      x(1, static_cast<std::size_t>(jp)) = params[0];
      x = sigma_power(x, i - 1);
      break;
    }
  }
  s.x = x;
  return s;
}

// ---------------------------------------------------------------------------
// Certificates.

/// Two independent points on the line, as the rows of a 2 x 4 matrix.
inline QMatrix representative(const Pluecker& ab) {
  // Columns of the primal matrix A B^T - B A^T lie in span(A, B).
  std::vector<Vec4<Rat>> cols;
  for (int j = 0; j < 4 && cols.size() < 2; ++j) {
    Vec4<Rat> c;
    for (int i = 0; i < 4; ++i) c[static_cast<std::size_t>(i)] = primal_entry(ab.coords(), i, j);
    if (all_zero(c)) continue;
    if (!cols.empty() && all_zero(join(cols[0], c))) continue;
    cols.push_back(c);
  }
  if (cols.size() != 2) throw ValidationError("degenerate Pluecker vector");
  QMatrix y(2, 4);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 4; ++c) y(r, c) = cols[r][c];
  return y;
}

/// Rational basis of the orthogonal complement of the row span of y.
inline QMatrix orthogonal_complement(const QMatrix& y) {
  const auto ker = kernel(y);
  return QMatrix::from_rows(ker, y.cols());
}

/// The constant c with det(M_ij) = c <AB ij> for all i < j, where
/// M = yperp . Z^T; nullopt if no single nonzero c works.
inline std::optional<Rat> projection_constant(const Pluecker& ab, const QMatrix& yperp, const ZMatrix& z) {
  if (yperp.rows() != 2 || yperp.cols() != 4) throw ValidationError("Y-perp must be 2 x 4");
  const QMatrix m = yperp * z.matrix().transpose();
  std::optional<Rat> c;
  bool any_nonzero_bracket = false;
  for (int i = 1; i <= z.n(); ++i)
    for (int j = i + 1; j <= z.n(); ++j) {
      const auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(j - 1);
      const Rat minor = m(0, a) * m(1, b) - m(0, b) * m(1, a);
      const Rat br = z.bracket(ab, i, j);
      if (br == 0) {
        if (minor != 0) return std::nullopt;
        continue;
      }
      any_nonzero_bracket = true;
      const Rat ratio = minor / br;
      if (!c) c = ratio;
      else if (*c != ratio) return std::nullopt;
    }
  if (!any_nonzero_bracket || !c || *c == 0) return std::nullopt;
  return c;
}

inline bool projection_identity_check(const Pluecker& ab, const ZMatrix& z) {
  return projection_constant(ab, orthogonal_complement(representative(ab)), z).has_value();
}

/// All 2x2 minors of x on columns outside {i, i+1} (cyclic, 1-based) vanish.
inline bool rank_one_certificate(const QMatrix& x, int i) {
  const int n = static_cast<int>(x.cols());
  std::vector<std::size_t> cols;
  for (int c = 1; c <= n; ++c)
    if (c != cyc(i, n) && c != cyc(i + 1, n)) cols.push_back(static_cast<std::size_t>(c - 1));
  for (std::size_t a = 0; a < cols.size(); ++a)
    for (std::size_t b = a + 1; b < cols.size(); ++b)
      if (x(0, cols[a]) * x(1, cols[b]) - x(0, cols[b]) * x(1, cols[a]) != 0) return false;
  return true;
}

/// All 2x2 minors share a weak sign and at least one is nonzero.
inline bool totally_nonnegative(const QMatrix& x) {
  int s = 0;
  for (std::size_t a = 0; a < x.cols(); ++a)
    for (std::size_t b = a + 1; b < x.cols(); ++b) {
      const int m = sign(x(0, a) * x(1, b) - x(0, b) * x(1, a));
      if (m == 0) continue;
      if (s != 0 && m != s) return false;
      s = m;
    }
  return s != 0;
}

}  // namespace ampli
