#include <catch_amalgamated.hpp>

#include <random>

#include "ampli/adjoint.hpp"
#include "ampli/polygon.hpp"

using namespace ampli;

namespace {

PolyQ var(std::size_t i) { return PolyQ::variable(6, i); }

Plk6<Rat> random_pluecker(std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-5, 5);
  for (;;) {
    const Vec4<Rat> a{d(rng), d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng), d(rng)};
    const auto p = join(a, b);
    if (!all_zero(p)) return p;
  }
}

Rat eval_normal_form(const QVector& c, const GrBasis& b, const Plk6<Rat>& p) {
  return AdjointPoly{b, c}.evaluate(p);
}

}  // namespace

TEST_CASE("normal-form basis sizes") {
  CHECK(gr_basis(0).size() == 1);
  CHECK(gr_basis(1).size() == 6);
  CHECK(gr_basis(2).size() == 20);
  for (int n = 4; n <= 10; ++n) CHECK(static_cast<std::int64_t>(gr_basis(static_cast<unsigned>(n - 4)).size()) ==
                                      binom(n + 1, 5) - binom(n - 1, 5));
  CHECK(gr_basis(4).size() == 105);
  for (const auto& e : gr_basis(3).monomials) CHECK_FALSE((e[kP13] > 0 && e[kP24] > 0));
}

TEST_CASE("reduction modulo the Pluecker relation") {
  const auto b2 = gr_basis(2);
  const QVector r = reduce_mod_pluecker(var(1) * var(4), b2);
  const QVector expect = reduce_mod_pluecker(var(0) * var(5) + var(2) * var(3), b2);
  CHECK(r == expect);
  Exponent e05{}, e23{};
  e05[0] = e05[5] = 1;
  e23[2] = e23[3] = 1;
  CHECK(r[b2.index_of(e05)] == 1);
  CHECK(r[b2.index_of(e23)] == 1);

  const PolyQ rel = var(0) * var(5) - var(1) * var(4) + var(2) * var(3);
  for (const auto& c : reduce_mod_pluecker(rel, b2)) CHECK(c == 0);

  const auto b4 = gr_basis(4);
  const PolyQ sq = var(1) * var(4) * var(1) * var(4);
  const QVector nf = reduce_mod_pluecker(sq, b4);
  std::mt19937 rng(8);
  for (int k = 0; k < 5; ++k) {
    const auto p = random_pluecker(rng);
    CHECK(eval_normal_form(nf, b4, p) == sq.evaluate(std::span<const Rat>(p.data(), 6)));
  }
  CHECK_THROWS_AS(reduce_mod_pluecker(var(0) + var(1) * var(2), b2), ValidationError);
}

TEST_CASE("constraint system sizes and ranks") {
  const auto m4 = assemble_constraints(moment_curve_z(4));
  CHECK(m4.rows() == 0);
  CHECK(m4.cols() == 1);

  const auto m5 = assemble_constraints(moment_curve_z(5));
  CHECK(m5.rows() == 10);
  CHECK(m5.cols() == 6);
  CHECK(rank(m5) == 5);

  const auto m6 = assemble_constraints(moment_curve_z(6));
  CHECK(m6.rows() == 46);
  CHECK(m6.cols() == 20);
  CHECK(rank(m6) == 19);

  const auto m7 = assemble_constraints(moment_curve_z(7));
  CHECK(rank(m7) == static_cast<std::size_t>(m7.cols() - 1));
}

TEST_CASE("surplus interpolation conditions") {
  for (std::int64_t n = 5; n <= 10; ++n) {
    const std::int64_t dim = binom(n + 1, 5) - binom(n - 1, 5);
    const auto c = closed_form_counts(n);
    CHECK(residual_count(n) - (dim - 1) == n * (n + 1) * (n - 4) / 6);
    CHECK(c[static_cast<std::size_t>(StratumType::t1III)] + c[static_cast<std::size_t>(StratumType::t1IV)] ==
          n * (n + 1) * (n - 4) / 6);
  }
}

TEST_CASE("adjoint for n = 4, 5, 6") {
  const auto a4 = solve_adjoint(moment_curve_z(4));
  CHECK(a4.coeffs == QVector{1});

  const ZMatrix z5 = moment_curve_z(5);
  const auto a5 = solve_adjoint(z5);
  const auto c5 = adjoint_n5_closed_form(z5);
  CHECK(proportional(a5.coeffs, c5.coeffs));
  for (const auto& v : {std::vector<int>{1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}}) {
    const auto id = canonical(StratumId{StratumType::t0IV, v}, 5);
    const auto p = std::get<Pluecker>(vertex_point(id, z5));
    CHECK(c5.evaluate(p.coords()) == 0);
  }
  for (const auto& id : enumerate_type(StratumType::t0III, 5))
    CHECK(c5.evaluate(std::get<Pluecker>(vertex_point(id, z5)).coords()) == 0);

  const ZMatrix z6 = moment_curve_z(6);
  const auto a6 = solve_adjoint(z6);
  CHECK(a6.basis.degree == 2);
  for (const auto& c : residual_curves(z6)) CHECK(a6.restrict_to(c.param).is_zero());
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) CHECK(a6.evaluate(z6.line(i, j)) != 0);
  for (const auto& v : enumerate_type(StratumType::t0II, 6))
    CHECK(a6.evaluate(std::get<Pluecker>(vertex_point(v, z6)).coords()) == 0);
}

TEST_CASE("adjoint for other positive Z") {
  const ZMatrix z = moment_curve_z({1, make_rat(3, 2), 2, make_rat(7, 2), 5, 8});
  const auto a = solve_adjoint(z);
  for (const auto& c : residual_curves(z)) CHECK(a.restrict_to(c.param).is_zero());

  // Positive row rescaling keeps the zero set.
  QMatrix s = z.matrix();
  for (std::size_t r = 0; r < s.rows(); ++r)
    for (std::size_t c = 0; c < 4; ++c) s(r, c) *= static_cast<long>(r + 1);
  const ZMatrix zs(s);
  const auto as = solve_adjoint(zs);
  for (const auto& c : residual_curves(zs))
    for (const auto& t : sample_parameters(c.param, 4, 20)) CHECK(a.evaluate(c.param.at(t)) == 0);
  (void)as;
}

TEST_CASE("pentagon adjoint") {
  const std::vector<Point2> pent{{1, 0}, {3, 0}, {4, 2}, {2, 4}, {0, 2}};
  const auto lines = edge_lines(pent);
  CHECK(lines[0] == Vec3{0, 1, 0});
  CHECK(lines[1] == Vec3{-2, 1, 6});
  CHECK(lines[2] == Vec3{-1, -1, 6});
  CHECK(lines[3] == Vec3{1, -1, 2});
  CHECK(lines[4] == Vec3{2, 1, -2});
  const PolyQ adj = dehomogenize(polygon_adjoint_2d(pent));
  PolyQ expect(2);
  auto add = [&](unsigned a, unsigned b, long c) {
    Exponent e{};
    e[0] = static_cast<std::uint16_t>(a);
    e[1] = static_cast<std::uint16_t>(b);
    expect.add_term(e, c);
  };
  add(2, 0, -4);
  add(1, 0, 16);
  add(0, 2, -2);
  add(0, 1, 28);
  add(0, 0, 48);
  CHECK(adj * Rat(-4) == expect);
}

TEST_CASE("quadrilateral and triangle adjoints") {
  const std::vector<Point2> quad{{0, 0}, {2, 0}, {3, 2}, {0, 1}};
  const auto pts = residual_points(quad);
  CHECK(pts.size() == 2);
  const PolyQ a = polygon_adjoint_2d(quad);
  CHECK(a.degree() == 1);
  for (const auto& p : pts) CHECK(a.evaluate(std::span<const Rat>(p.data(), 3)) == 0);

  const PolyQ t = polygon_adjoint_2d({{0, 0}, {1, 0}, {0, 1}});
  CHECK(t.degree() == 0);
  CHECK(t == PolyQ(3, Rat(1)));

  CHECK_THROWS_AS(polygon_adjoint_2d({{0, 0}, {1, 0}, {2, 0}, {0, 1}}), ValidationError);
  CHECK_THROWS_AS(polygon_adjoint_2d({{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}}), ValidationError);
}
