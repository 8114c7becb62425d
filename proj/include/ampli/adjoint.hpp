#pragma once

// Degree n-4 forms on Gr(2,4) vanishing on the residual arrangement.
//
// Forms are written in the monomial basis of the coordinate ring that omits
// multiples of p13*p24; the Pluecker relation p13 p24 = p12 p34 + p14 p23 is
// the rewrite rule to that normal form. Interpolation samples each residual
// line at n-3 rational points and each residual conic at 2n-7, which forces
// vanishing on the whole curve by degree.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ampli/combinatorics.hpp"
#include "ampli/error.hpp"
#include "ampli/grassmann.hpp"
#include "ampli/matrix.hpp"
#include "ampli/parallel.hpp"
#include "ampli/poly.hpp"
#include "ampli/strata.hpp"
#include "ampli/zinput.hpp"

namespace ampli {

inline constexpr std::size_t kP13 = 1, kP24 = 4;

inline const std::vector<std::string>& pluecker_names() {
  static const std::vector<std::string> names{"p12", "p13", "p14", "p23", "p24", "p34"};
  return names;
}

struct GrBasis {
  unsigned degree = 0;
  std::vector<Exponent> monomials;  // descending lexicographic order

  std::size_t size() const { return monomials.size(); }
  std::size_t index_of(const Exponent& e) const {
    const auto it = std::lower_bound(monomials.begin(), monomials.end(), e, std::greater<>());
    if (it == monomials.end() || *it != e) throw ValidationError("monomial is not in normal form");
    return static_cast<std::size_t>(it - monomials.begin());
  }
};

inline GrBasis gr_basis(unsigned d) {
  GrBasis b{d, {}};
  Exponent e{};
  // Recursive composition of d into 6 parts, largest first exponent first.
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var == 5) {
      e[5] = static_cast<std::uint16_t>(left);
      if (!(e[kP13] > 0 && e[kP24] > 0)) b.monomials.push_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[var] = static_cast<std::uint16_t>(k);
      self(self, var + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return b;
}

/// Coefficients of the normal form of a homogeneous degree-d polynomial in
/// the six Pluecker variables.
inline QVector reduce_mod_pluecker(const PolyQ& p, const GrBasis& basis) {
  if (p.nvars() != 0 && p.nvars() != 6) throw ValidationError("expected a polynomial in 6 variables");
  if (!p.is_homogeneous(basis.degree)) throw ValidationError("polynomial is not homogeneous of the basis degree");
  std::map<Exponent, Rat, std::greater<>> work(p.terms().begin(), p.terms().end());
  QVector out(basis.size(), Rat(0));
  while (!work.empty()) {
    auto it = work.begin();
    Exponent e = it->first;
    const Rat c = it->second;
    work.erase(it);
    if (c == 0) continue;
    if (e[kP13] > 0 && e[kP24] > 0) {
      --e[kP13];
      --e[kP24];
      Exponent a = e, b = e;
      ++a[0];
      ++a[5];
      ++b[2];
      ++b[3];
      work[a] += c;
      work[b] += c;
    } else {
      out[basis.index_of(e)] += c;
    }
  }
  return out;
}

inline Rat eval_monomial(const Exponent& e, const Plk6<Rat>& p) {
  Rat acc = 1;
  for (std::size_t i = 0; i < 6; ++i)
    for (unsigned k = 0; k < e[i]; ++k) acc *= p[i];
  return acc;
}

struct AdjointPoly {
  GrBasis basis;
  QVector coeffs;

  PolyQ to_poly() const {
    PolyQ p(6);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (coeffs[k] != 0) p.add_term(basis.monomials[k], coeffs[k]);
    return p;
  }
  Rat evaluate(const Plk6<Rat>& p) const {
    Rat acc = 0;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (coeffs[k] != 0) acc += coeffs[k] * eval_monomial(basis.monomials[k], p);
    return acc;
  }
  UPoly restrict_to(const CurveParam& c) const {
    return substitute<UPoly>(to_poly(), std::span<const UPoly>(c.pluecker.data(), 6), UPoly(1));
  }
  std::string to_string() const { return to_poly().to_string(pluecker_names()); }
};

/// Scales v so that its first nonzero entry is 1.
inline QVector normalize_first(QVector v) {
  for (const auto& x : v)
    if (x != 0) {
      const Rat s = x;
      for (auto& y : v) y /= s;
      break;
    }
  return v;
}

struct ResidualCurve {
  StratumId id;
  CurveParam param;
};

inline std::vector<ResidualCurve> residual_curves(const ZMatrix& z) {
  std::vector<ResidualCurve> out;
  for (const auto& id : enumerate_type(StratumType::t1III, z.n())) out.push_back({id, residual_line_param(id, z)});
  for (const auto& id : enumerate_type(StratumType::t1IV, z.n())) out.push_back({id, residual_conic_param(id, z)});
  return out;
}

/// Parameter values 1, 2, 3, ... skipping those where the curve vanishes.
inline std::vector<Rat> sample_parameters(const CurveParam& c, std::size_t count, long start = 1) {
  std::vector<Rat> ts;
  for (long t = start; ts.size() < count; ++t) {
    if (t > start + static_cast<long>(count) + 64) throw ClaimError("too few admissible sample parameters");
    if (!all_zero(c.at(Rat(t)))) ts.emplace_back(t);
  }
  return ts;
}

inline std::size_t samples_needed(const CurveParam& c, int n) {
  return c.component_degree == 1 ? static_cast<std::size_t>(n - 3) : static_cast<std::size_t>(2 * n - 7);
}

/// One row per sample point: the basis monomials evaluated there.
inline QMatrix assemble_constraints(const ZMatrix& z) {
  const int n = z.n();
  const GrBasis basis = gr_basis(static_cast<unsigned>(n - 4));
  if (n < 5) return QMatrix(0, basis.size());
  const auto curves = residual_curves(z);
  std::vector<std::vector<QVector>> blocks(curves.size());
  parallel_for(curves.size(), [&](std::size_t k) {
    const auto& c = curves[k].param;
    for (const auto& t : sample_parameters(c, samples_needed(c, n))) {
      const auto p = c.at(t);
      QVector row(basis.size());
      for (std::size_t m = 0; m < basis.size(); ++m) row[m] = eval_monomial(basis.monomials[m], p);
      blocks[k].push_back(std::move(row));
    }
  });
  std::vector<QVector> rows;
  for (auto& b : blocks)
    for (auto& r : b) rows.push_back(std::move(r));
  return QMatrix::from_rows(rows, basis.size());
}

/// The unique adjoint up to scale from the interpolation kernel, normalized so the first nonzero
/// coefficient in basis order is 1. Verified to vanish identically on every
/// residual curve and to be nonzero at every (0,I) vertex.
inline AdjointPoly adjoint_from_kernel(const ZMatrix& z, const std::vector<QVector>& ker) {
  const int n = z.n();
  if (ker.empty()) throw ClaimError("interpolation system has trivial kernel");
  if (ker.size() > 1)
    throw ClaimError("interpolation kernel has dimension " + std::to_string(ker.size()) + " (non-generic Z)");
  AdjointPoly a{gr_basis(static_cast<unsigned>(n - 4)), normalize_first(ker[0])};

  if (n >= 5)
    for (const auto& c : residual_curves(z))
      if (!a.restrict_to(c.param).is_zero())
        throw ClaimError("adjoint does not vanish on " + to_string(c.id));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (a.evaluate(z.line(i, j)) == 0)
        throw ClaimError("adjoint vanishes at boundary vertex (0,I," + std::to_string(i) + "," + std::to_string(j) + ")");
  return a;
}

inline AdjointPoly solve_adjoint(const ZMatrix& z) { return adjoint_from_kernel(z, kernel(assemble_constraints(z))); }

/// The second compound of Z: rows indexed by pairs of points, columns by
/// pairs of coordinates, in the Pluecker coordinate order.
inline QMatrix second_compound(const QMatrix& z) {
  const auto pairs = subsets(static_cast<int>(z.rows()), 2);
  QMatrix c(pairs.size(), 6);
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    const auto a = static_cast<std::size_t>(pairs[r][0]), b = static_cast<std::size_t>(pairs[r][1]);
    for (std::size_t k = 0; k < 6; ++k) {
      const auto [i, j] = kPairs[k];
      c(r, k) = z(a, static_cast<std::size_t>(i)) * z(b, static_cast<std::size_t>(j)) -
                z(a, static_cast<std::size_t>(j)) * z(b, static_cast<std::size_t>(i));
    }
  }
  return c;
}

/// n = 5: the linear form sum d_kl p_kl with (second compound of Z) d = c,
/// where c_ij is the product of the maximal minors of Z omitting one of the
/// three rows outside {i, j}.
inline AdjointPoly adjoint_n5_closed_form(const ZMatrix& z) {
  if (z.n() != 5) throw ValidationError("the closed form applies to n = 5");
  if (!z.totally_positive()) throw ValidationError("Z must be totally positive");
  std::array<Rat, 5> hat;
  for (int k = 1; k <= 5; ++k) {
    std::vector<int> rows;
    for (int r = 1; r <= 5; ++r)
      if (r != k) rows.push_back(r);
    hat[static_cast<std::size_t>(k - 1)] = z.minor4(rows[0], rows[1], rows[2], rows[3]);
  }
  const QMatrix w = second_compound(z.matrix());
  QVector c;
  for (const auto& pr : subsets(5, 2)) {
    Rat ci = 1;
    for (int k = 0; k < 5; ++k)
      if (k != pr[0] && k != pr[1]) ci *= hat[static_cast<std::size_t>(k)];
    c.push_back(ci);
  }
  QVector d;
  if (!solve(w, c, d)) throw ClaimError("closed-form system is inconsistent");
  GrBasis basis = gr_basis(1);
  QVector coeffs(6);
  for (std::size_t k = 0; k < 6; ++k) {
    Exponent e{};
    e[k] = 1;
    coeffs[basis.index_of(e)] = d[k];
  }
  return AdjointPoly{basis, coeffs};
}

inline bool proportional(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) return false;
  bool nz = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    nz = nz || a[i] != 0;
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  }
  return nz;
}

}  // namespace ampli
