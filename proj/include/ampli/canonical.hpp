#pragma once

// The top form alpha / prod <AB i(i+1)> in affine charts of Gr(2,4), its
// residues along facets and at simple boundary vertices, and the planar
// polygon analogue.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ampli/adjoint.hpp"
#include "ampli/error.hpp"
#include "ampli/grassmann.hpp"
#include "ampli/membership.hpp"
#include "ampli/parallel.hpp"
#include "ampli/poly.hpp"
#include "ampli/polygon.hpp"
#include "ampli/strata.hpp"
#include "ampli/zinput.hpp"

namespace ampli {

inline Rat eval4(const PolyQ& p, const Vec4<Rat>& x) { return p.evaluate(std::span<const Rat>(x.data(), 4)); }

struct TopForm {
  Chart chart{1, 2};
  PolyQ numerator;
  std::vector<PolyQ> factors;                    // factor k-1 is <AB k(k+1)>
  std::vector<std::array<PolyQ, 4>> gradients;  // partial derivatives of each factor
  Rat scale = 1;

  int n() const { return static_cast<int>(factors.size()); }
  const PolyQ& factor(int i) const { return factors[static_cast<std::size_t>(cyc(i, n()) - 1)]; }
  const std::array<PolyQ, 4>& gradient(int i) const { return gradients[static_cast<std::size_t>(cyc(i, n()) - 1)]; }
};

inline TopForm build_form(const ZMatrix& z, const AdjointPoly& a, const Chart& chart) {
  TopForm f;
  f.chart = chart;
  const Plk6<PolyQ> p = chart_polynomials(chart);
  const PolyQ one(4, Rat(1));
  f.numerator = substitute<PolyQ>(a.to_poly(), std::span<const PolyQ>(p.data(), 6), one);
  for (int i = 1; i <= z.n(); ++i) {
    const Plk6<Rat> e = z.edge(i);
    PolyQ g(4);
    // pairing(p, e) written out so the constants stay on the right.
    g = p[0] * e[5] - p[1] * e[4] + p[2] * e[3] + p[3] * e[2] - p[4] * e[1] + p[5] * e[0];
    std::array<PolyQ, 4> grad;
    for (std::size_t k = 0; k < 4; ++k) grad[k] = g.derivative(k);
    f.factors.push_back(std::move(g));
    f.gradients.push_back(std::move(grad));
  }
  for (std::size_t a1 = 0; a1 < f.factors.size(); ++a1)
    for (std::size_t b1 = a1 + 1; b1 < f.factors.size(); ++b1) {
      // Distinct irreducible quadrics; proportional factors would double a pole.
      const auto& ta = f.factors[a1].terms();
      const auto& tb = f.factors[b1].terms();
      if (ta.size() == tb.size() && !ta.empty()) {
        const Rat r = tb.begin()->second / ta.begin()->second;
        if (f.factors[a1] * r == f.factors[b1]) throw ClaimError("two facet brackets coincide in the chart");
      }
    }
  return f;
}

/// Forms in all six standard charts sharing one scale.
struct FormAtlas {
  std::vector<TopForm> forms;

  FormAtlas(const ZMatrix& z, const AdjointPoly& a) {
    for (const auto& c : all_charts()) forms.push_back(build_form(z, a, c));
  }
  const TopForm& for_point(const Plk6<Rat>& p) const {
    for (const auto& f : forms)
      if (p[static_cast<std::size_t>(f.chart.pivot())] != 0) return f;
    throw ValidationError("zero Pluecker vector");
  }
  void set_scale(const Rat& s) {
    for (auto& f : forms) f.scale = s;
  }
  Rat scale() const { return forms.front().scale; }
};

inline Vec4<Rat> coords_in(const TopForm& f, const Plk6<Rat>& p) { return chart_coords(Pluecker(p), f.chart); }

// ---------------------------------------------------------------------------
// Vertex residues.

/// The four facets through the simple vertex Z_iZ_j, in increasing order.
inline std::array<int, 4> canonical_flag(int i, int j, int n) {
  std::array<int, 4> f{cyc(i - 1, n), cyc(i, n), cyc(j - 1, n), cyc(j, n)};
  std::sort(f.begin(), f.end());
  return f;
}

inline bool is_simple_vertex(int i, int j, int n) { return cyclic_distance(i, j, n) >= 2; }

/// scale * N(v) / (prod_{m not in flag} g_m(v) * det J), J the Jacobian of
/// the flagged factors at v in chart coordinates.
inline Rat vertex_residue(const TopForm& form, int i, int j, const std::array<int, 4>& flag, const ZMatrix& z) {
  const int n = z.n();
  if (!is_simple_vertex(i, j, n)) throw ValidationError("vertex is not simple");
  const Plk6<Rat> v = z.line(i, j);
  if (v[static_cast<std::size_t>(form.chart.pivot())] == 0) throw ValidationError("vertex not in chart " + form.chart.name());
  const Vec4<Rat> x = coords_in(form, v);
  Rat denom = 1;
  for (int m = 1; m <= n; ++m) {
    if (std::find(flag.begin(), flag.end(), m) != flag.end()) continue;
    const Rat g = eval4(form.factor(m), x);
    if (g == 0) throw ClaimError("vertex lies on a fifth facet");
    denom *= g;
  }
  QMatrix jac(4, 4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) jac(a, b) = eval4(form.gradient(flag[a])[b], x);
  const Rat dj = det(jac);
  if (dj == 0) throw ClaimError("facets are not transverse at the vertex");
  return form.scale * eval4(form.numerator, x) / (denom * dj);
}

struct ResidueReport {
  StratumId vertex;
  std::array<int, 4> flag{};
  Rat value;
  std::string chart_used;
};

struct Normalization {
  Rat scale;
  std::vector<ResidueReport> reports;
  bool verified = false;
};

/// Residues at all simple (0,I) vertices with the canonical flag; the scale
/// makes the first one +1.
inline Normalization normalize(FormAtlas& atlas, const ZMatrix& z) {
  const int n = z.n();
  atlas.set_scale(1);
  std::vector<std::pair<int, int>> verts;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (is_simple_vertex(i, j, n)) verts.emplace_back(i, j);
  if (verts.empty()) throw ClaimError("no simple vertex");
  std::vector<ResidueReport> reports(verts.size());
  parallel_for(verts.size(), [&](std::size_t k) {
    const auto [i, j] = verts[k];
    const TopForm& f = atlas.for_point(z.line(i, j));
    const auto flag = canonical_flag(i, j, n);
    reports[k] = {StratumId{StratumType::t0I, {i, j}}, flag, vertex_residue(f, i, j, flag, z), f.chart.name()};
  });
  Normalization out;
  out.scale = Rat(1) / reports.front().value;
  out.verified = true;
  for (auto& r : reports) {
    r.value *= out.scale;
    out.verified = out.verified && (r.value == 1 || r.value == -1);
  }
  out.reports = std::move(reports);
  atlas.set_scale(out.scale);
  return out;
}

// ---------------------------------------------------------------------------
// Facet residues.

struct FacetCheck {
  int facet = 0;
  int boundary_samples = 0, boundary_poles = 0;
  int residual_samples = 0, residual_zeros = 0;
  int interior_samples = 0, interior_finite = 0;
  bool ok() const {
    return boundary_samples > 0 && interior_samples > 0 && boundary_poles == boundary_samples &&
           residual_zeros == residual_samples && interior_finite == interior_samples;
  }
};

/// Local data of the Leray residue along facet i at a point of {g_i = 0}.
struct LerayPoint {
  bool on_facet = false;
  int vanishing_others = 0;  // remaining factors vanishing at the point
  Rat numerator;
  std::optional<Rat> density;  // N / (prod_{m != i} g_m * dg_i/dx_k), if finite
};

inline LerayPoint leray_point(const FormAtlas& atlas, int i, const Plk6<Rat>& p) {
  LerayPoint out;
  for (const auto& f : atlas.forms) {
    if (p[static_cast<std::size_t>(f.chart.pivot())] == 0) continue;
    const Vec4<Rat> x = coords_in(f, p);
    std::optional<Rat> partial;
    for (std::size_t k = 0; k < 4 && !partial; ++k) {
      const Rat d = eval4(f.gradient(i)[k], x);
      if (d != 0) partial = d;
    }
    if (!partial) continue;  // singular in this chart, try the next one
    out.on_facet = eval4(f.factor(i), x) == 0;
    out.numerator = eval4(f.numerator, x);
    Rat rest = 1;
    for (int m = 1; m <= f.n(); ++m) {
      if (cyc(m, f.n()) == cyc(i, f.n())) continue;
      const Rat g = eval4(f.factor(m), x);
      if (g == 0) ++out.vanishing_others;
      rest *= g;
    }
    if (rest != 0) out.density = f.scale * out.numerator / (rest * *partial);
    return out;
  }
  throw ClaimError("facet gradient vanishes in every chart");
}

/// Pole, zero and finite-value checks of the residue along facet i.
inline FacetCheck facet_residue_check(const FormAtlas& atlas, int i, const ZMatrix& z) {
  const int n = z.n();
  FacetCheck r;
  r.facet = i;
  const std::vector<std::vector<Rat>> p2{{1, 2}, {3, 1}}, p3{{1, 2, 3}, {2, 1, 1}, {5, 3, 2}};
  auto image = [&](CellTag t, std::vector<int> idx, const std::vector<Rat>& params) {
    return amplituhedron_map(cell_sample(t, std::move(idx), params, n).x, z).coords();
  };

  std::vector<Plk6<Rat>> boundary;
  for (const auto& ps : p2) {
    boundary.push_back(image(CellTag::plane_I, {i}, ps));
    boundary.push_back(image(CellTag::plane_I, {cyc(i + 1, n)}, ps));
    boundary.push_back(image(CellTag::plane_II, {i}, ps));
    boundary.push_back(image(CellTag::plane_II, {cyc(i + 1, n)}, ps));
    for (int j = 1; j <= n; ++j)
      if (detail::edges_disjoint(i, j, n)) boundary.push_back(image(CellTag::quadric_III, {i, j}, ps));
  }
  for (const auto& p : boundary) {
    const auto lp = leray_point(atlas, i, p);
    ++r.boundary_samples;
    if (lp.on_facet && lp.vanishing_others == 1 && lp.numerator != 0) ++r.boundary_poles;
  }

  if (n >= 5)
    for (const auto& c : residual_curves(z)) {
      const auto conds = schubert_conditions(c.id);
      bool on = false;
      for (const auto& cd : conds) {
        if (cd.kind == ConditionKind::line && cyc(cd.idx[0], n) == cyc(i, n) && cyc(cd.idx[1], n) == cyc(i + 1, n))
          on = true;
        if (cd.kind == ConditionKind::plane && (cyc(cd.idx[0], n) == cyc(i, n) || cyc(cd.idx[0] - 1, n) == cyc(i, n)))
          on = true;
      }
      if (!on) continue;
      for (const auto& t : sample_parameters(c.param, 3)) {
        const auto lp = leray_point(atlas, i, c.param.at(t));
        ++r.residual_samples;
        if (lp.on_facet && lp.numerator == 0) ++r.residual_zeros;
      }
    }

  for (const auto& ps : p3) {
    const auto lp = leray_point(atlas, i, image(CellTag::facet, {i}, ps));
    ++r.interior_samples;
    if (lp.on_facet && lp.density && *lp.density != 0) ++r.interior_finite;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Polygons.

struct EdgeResidue {
  std::size_t edge = 0;  // joins vertex edge and edge+1
  Vec3 line{};
  char coordinate = 'x';
  RatFun1 density{UPoly(0), UPoly(1)};
  Rat start_residue, end_residue;
};

struct PolygonDemo {
  PolyQ adjoint;  // affine, leading coefficient 1
  Rat scale;      // Omega = scale * adjoint / prod(lines) dx ^ dy
  std::vector<EdgeResidue> edges;
  bool all_unit = false;
};

/// Omega(P) = adjoint / prod(edge lines) dx ^ dy, its residue on every edge
/// line in the coordinate x (or y on vertical edges), and the residues of
/// those at the two endpoints, after one global scaling.
inline PolygonDemo polygon_canonical_demo(const std::vector<Point2>& vertices) {
  const auto lines = edge_lines(vertices);
  PolygonDemo demo;
  demo.adjoint = dehomogenize(polygon_adjoint_2d(vertices));
  const std::size_t m = lines.size();
  auto restrict_line = [](const Vec3& l, const UPoly& x, const UPoly& y) { return x * l[0] + y * l[1] + UPoly(l[2]); };
  for (std::size_t k = 0; k < m; ++k) {
    const Vec3& l = lines[k];
    EdgeResidue e;
    e.edge = k;
    e.line = l;
    UPoly x, y;
    Rat jac;  // Res = jac * A / R in the chosen coordinate
    if (l[1] != 0) {
      e.coordinate = 'x';
      x = UPoly::x();
      y = (UPoly::x() * l[0] + UPoly(l[2])) * Rat(Rat(-1) / l[1]);
      jac = Rat(-1) / l[1];
    } else {
      e.coordinate = 'y';
      x = UPoly(Rat(-l[2] / l[0]));
      y = UPoly::x();
      jac = Rat(1) / l[0];
    }
    const std::array<UPoly, 2> xy{x, y};
    const UPoly num = substitute<UPoly>(demo.adjoint, std::span<const UPoly>(xy.data(), 2), UPoly(1)) * jac;
    UPoly den(1);
    for (std::size_t q = 0; q < m; ++q)
      if (q != k) den = den * restrict_line(lines[q], x, y);
    e.density = RatFun1(num, den);
    const Point2& a = vertices[k];
    const Point2& b = vertices[(k + 1) % m];
    e.start_residue = residue_at(e.density, e.coordinate == 'x' ? a.x : a.y);
    e.end_residue = residue_at(e.density, e.coordinate == 'x' ? b.x : b.y);
    demo.edges.push_back(std::move(e));
  }
  demo.scale = Rat(1) / demo.edges.front().start_residue;
  demo.all_unit = true;
  for (auto& e : demo.edges) {
    e.density = RatFun1(e.density.num() * demo.scale, e.density.den());
    e.start_residue *= demo.scale;
    e.end_residue *= demo.scale;
    for (const Rat& r : {e.start_residue, e.end_residue}) demo.all_unit = demo.all_unit && (r == 1 || r == -1);
  }
  return demo;
}

}  // namespace ampli
