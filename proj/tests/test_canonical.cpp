#include <catch_amalgamated.hpp>

#include <random>

#include "ampli/canonical.hpp"

using namespace ampli;

namespace {

ZMatrix random_moment_z(std::mt19937& rng, int n) {
  std::uniform_int_distribution<long> step(1, 7), den(1, 4);
  std::vector<Rat> nodes;
  Rat t = 0;
  for (int k = 0; k < n; ++k) {
    t += make_rat(step(rng), den(rng));
    nodes.push_back(t);
  }
  return moment_curve_z(nodes);
}

Normalization normalized(const ZMatrix& z) {
  FormAtlas atlas(z, solve_adjoint(z));
  return normalize(atlas, z);
}

}  // namespace

TEST_CASE("chart forms have the expected degrees") {
  const ZMatrix z = moment_curve_z(6);
  const auto a = solve_adjoint(z);
  for (const auto& c : all_charts()) {
    const TopForm f = build_form(z, a, c);
    CHECK(f.n() == 6);
    CHECK(f.numerator.degree() <= 4);
    for (int i = 1; i <= 6; ++i) {
      CHECK(f.factor(i).degree() <= 2);
      CHECK_FALSE(f.factor(i).is_zero());
    }
  }
}

TEST_CASE("canonical flags") {
  CHECK(canonical_flag(1, 3, 5) == std::array<int, 4>{1, 2, 3, 5});
  CHECK(canonical_flag(2, 5, 6) == std::array<int, 4>{1, 2, 4, 5});
  CHECK(is_simple_vertex(1, 3, 5));
  CHECK_FALSE(is_simple_vertex(1, 5, 5));
  CHECK_FALSE(is_simple_vertex(2, 3, 5));
}

TEST_CASE("vertex residues are +-1 after one scaling") {
  const std::array<std::size_t, 3> expected_reports{2, 5, 9};
  for (int n = 4; n <= 8; ++n) {
    INFO("n = " << n);
    const auto r = normalized(moment_curve_z(n));
    if (n <= 6) CHECK(r.reports.size() == expected_reports[static_cast<std::size_t>(n - 4)]);
    CHECK(r.reports.size() == static_cast<std::size_t>(n * (n - 3) / 2));
    CHECK(r.verified);
    CHECK(r.reports.front().value == 1);
  }
  std::mt19937 rng(2024);
  for (int k = 0; k < 3; ++k) {
    const ZMatrix z = random_moment_z(rng, 6 + k);
    REQUIRE(z.totally_positive());
    CHECK(normalized(z).verified);
  }
}

TEST_CASE("perturbed numerator breaks unit residues") {
  const ZMatrix z = moment_curve_z(6);
  auto a = solve_adjoint(z);
  for (auto& c : a.coeffs)
    if (c != 0) {
      c += 1;
      break;
    }
  FormAtlas atlas(z, a);
  CHECK_FALSE(normalize(atlas, z).verified);
}

TEST_CASE("residue magnitude does not depend on the chart") {
  const ZMatrix z = moment_curve_z(6);
  FormAtlas atlas(z, solve_adjoint(z));
  normalize(atlas, z);
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 2; j <= 6; ++j) {
      if (!is_simple_vertex(i, j, 6)) continue;
      const auto flag = canonical_flag(i, j, 6);
      std::optional<Rat> ref;
      for (const auto& f : atlas.forms) {
        if (z.line(i, j)[static_cast<std::size_t>(f.chart.pivot())] == 0) continue;
        const Rat r = vertex_residue(f, i, j, flag, z);
        const Rat m = r < 0 ? Rat(-r) : r;
        if (!ref) ref = m;
        CHECK(m == *ref);
      }
      REQUIRE(ref);
      CHECK(*ref == 1);
    }
}

TEST_CASE("swapping two facets in the flag flips the residue") {
  const ZMatrix z = moment_curve_z(7);
  FormAtlas atlas(z, solve_adjoint(z));
  normalize(atlas, z);
  const TopForm& f = atlas.for_point(z.line(2, 5));
  auto flag = canonical_flag(2, 5, 7);
  const Rat r = vertex_residue(f, 2, 5, flag, z);
  std::swap(flag[0], flag[1]);
  CHECK(vertex_residue(f, 2, 5, flag, z) == -r);
  CHECK_THROWS_AS(vertex_residue(f, 2, 3, canonical_flag(2, 3, 7), z), ValidationError);
}

TEST_CASE("facet residues: poles on the boundary, zeros on residual curves") {
  for (int n = 5; n <= 7; ++n) {
    const ZMatrix z = moment_curve_z(n);
    FormAtlas atlas(z, solve_adjoint(z));
    normalize(atlas, z);
    for (int i = 1; i <= n; ++i) {
      INFO("n = " << n << ", facet " << i);
      const auto r = facet_residue_check(atlas, i, z);
      CHECK(r.boundary_poles == r.boundary_samples);
      CHECK(r.residual_zeros == r.residual_samples);
      CHECK(r.interior_finite == r.interior_samples);
      CHECK(r.residual_samples > 0);
      CHECK(r.ok());
    }
  }
}

TEST_CASE("pentagon canonical form") {
  const std::vector<Point2> pent{{1, 0}, {3, 0}, {4, 2}, {2, 4}, {0, 2}};
  const auto demo = polygon_canonical_demo(pent);
  CHECK(demo.all_unit);
  // Integer numerator -4x^2 + 16x - 2y^2 + 28y + 48 with prefactor -2.
  CHECK(demo.scale == 8);
  CHECK(demo.adjoint * Rat(-4) * Rat(-2) == demo.adjoint * demo.scale);
  const auto& e0 = demo.edges[0];
  CHECK(e0.coordinate == 'x');
  // 2 / ((x - 1)(3 - x))
  const UPoly expect_den = (UPoly::x() - UPoly(1)) * (UPoly(3) - UPoly::x());
  CHECK(e0.density == RatFun1(UPoly(2), expect_den));
  CHECK(e0.start_residue == 1);
  CHECK(e0.end_residue == -1);
  for (const auto& e : demo.edges) CHECK(e.start_residue == -e.end_residue);
}

TEST_CASE("square and triangle canonical forms") {
  const auto sq = polygon_canonical_demo({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(sq.all_unit);
  CHECK(sq.adjoint == PolyQ(2, Rat(1)));
  bool saw_vertical = false;
  for (const auto& e : sq.edges) saw_vertical = saw_vertical || e.coordinate == 'y';
  CHECK(saw_vertical);

  const auto tri = polygon_canonical_demo({{0, 0}, {2, 0}, {0, 3}});
  CHECK(tri.all_unit);
}

TEST_CASE("chart change rescales numerator and factors by the pivot") {
  const ZMatrix z = moment_curve_z(7);
  const auto a = solve_adjoint(z);
  const TopForm f12 = build_form(z, a, Chart(1, 2));
  const TopForm f34 = build_form(z, a, Chart(3, 4));
  const auto p12 = static_cast<std::size_t>(f12.chart.pivot()), p34 = static_cast<std::size_t>(f34.chart.pivot());
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> d(-6, 6);
  int tested = 0;
  while (tested < 10) {
    const Vec4<Rat> u{d(rng), d(rng), d(rng), d(rng)}, v{d(rng), d(rng), d(rng), d(rng)};
    const auto p = join(u, v);
    if (p[p12] == 0 || p[p34] == 0) continue;
    ++tested;
    const auto x = coords_in(f12, p), y = coords_in(f34, p);
    Rat s12 = 1, s34 = 1;
    for (int k = 0; k < 3; ++k) {
      s12 *= p[p12];
      s34 *= p[p34];
    }
    CHECK(eval4(f12.numerator, x) * s12 == eval4(f34.numerator, y) * s34);
    for (int i = 1; i <= 7; ++i) CHECK(eval4(f12.factor(i), x) * p[p12] == eval4(f34.factor(i), y) * p[p34]);
  }
}

TEST_CASE("n = 4 form and boundary-surface pole count") {
  const ZMatrix z4 = moment_curve_z(4);
  FormAtlas atlas(z4, solve_adjoint(z4));
  CHECK(atlas.forms.front().numerator == PolyQ(4, Rat(1)));
  const auto r = normalize(atlas, z4);
  CHECK(r.verified);
  CHECK(r.reports.size() == 2);
  for (int i = 1; i <= 4; ++i) {
    const auto c = facet_residue_check(atlas, i, z4);
    CHECK(c.residual_samples == 0);
    CHECK(c.ok());
  }
}
