#include <catch_amalgamated.hpp>

#include <random>

#include "ampli/grassmann.hpp"

using namespace ampli;

namespace {

PointP3 pt(Rat a, Rat b, Rat c, Rat d) { return PointP3{{a, b, c, d}}; }
PointP3 moment(int t) { return pt(1, t, t * t, t * t * t); }

QMatrix stack4(const Vec4<Rat>& a, const Vec4<Rat>& b, const Vec4<Rat>& c, const Vec4<Rat>& d) {
  QMatrix m(4, 4);
  const std::array<const Vec4<Rat>*, 4> rows{&a, &b, &c, &d};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = (*rows[i])[j];
  return m;
}

Vec4<Rat> random_vec(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-6, 6), q(1, 4);
  return {make_rat(d(rng), q(rng)), make_rat(d(rng), q(rng)), make_rat(d(rng), q(rng)), make_rat(d(rng), q(rng))};
}

}  // namespace

TEST_CASE("pluecker_from_matrix examples") {
  CHECK(pluecker_from_matrix(QMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}}) == Pluecker{1, 0, 0, 0, 0, 0});
  CHECK(pluecker_from_matrix(QMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}}) == Pluecker{0, 0, 0, 0, 0, 1});
  CHECK(pluecker_from_matrix(QMatrix{{1, 1, 1, 1}, {1, 2, 3, 4}}) == Pluecker{1, 2, 3, 1, 2, 1});
  CHECK_THROWS_AS(pluecker_from_matrix(QMatrix{{1, 2, 3, 4}, {2, 4, 6, 8}}), ValidationError);
  CHECK_THROWS_AS((Pluecker{2, 2, 2, 2, 2, 1}), ValidationError);
}

TEST_CASE("Pluecker relation holds on random rank-2 matrices") {
  std::mt19937 rng(5);
  int done = 0;
  while (done < 500) {
    const auto a = random_vec(rng), b = random_vec(rng);
    const auto p = join(a, b);
    if (all_zero(p)) continue;
    CHECK(plucker_relation(p) == 0);
    ++done;
  }
}

TEST_CASE("bracket examples and determinant agreement") {
  const Pluecker e12{1, 0, 0, 0, 0, 0};
  CHECK(bracket(e12, pt(0, 0, 1, 0), pt(0, 0, 0, 1)) == 1);
  const Pluecker z12 = line_through(moment(1), moment(2));
  CHECK(bracket(z12, moment(1), moment(2)) == 0);
  CHECK(bracket(z12, moment(3), moment(4)) == 12);

  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_vec(rng), b = random_vec(rng), c = random_vec(rng), d = random_vec(rng);
    const auto p = join(a, b);
    if (all_zero(p)) continue;
    const Pluecker ab(p);
    CHECK(bracket(ab, PointP3{c}, PointP3{d}) == det4(stack4(a, b, c, d)));
    CHECK(bracket(ab, PointP3{c}, PointP3{d}) == -bracket(ab, PointP3{d}, PointP3{c}));
  }
}

TEST_CASE("line_contains_point") {
  const Pluecker e12{1, 0, 0, 0, 0, 0};
  CHECK(line_contains_point(e12, pt(1, 0, 0, 0)).holds);
  CHECK_FALSE(line_contains_point(e12, pt(0, 0, 1, 0)).holds);
  CHECK(line_contains_point(e12, pt(1, 0, 0, 0)).conditions.size() == 3);
  const Pluecker l = pluecker_from_matrix(QMatrix{{1, 1, 1, 1}, {1, 2, 3, 4}});
  CHECK(line_contains_point(l, pt(0, 1, 2, 3)).holds);
  CHECK_FALSE(line_contains_point(l, pt(0, 1, 2, 4)).holds);

  // Containment forces every bracket with the point to vanish.
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_vec(rng), b = random_vec(rng), w = random_vec(rng);
    const auto p = join(a, b);
    if (all_zero(p)) continue;
    const Pluecker ab(p);
    Vec4<Rat> z;
    for (std::size_t i = 0; i < 4; ++i) z[i] = 3 * a[i] - Rat(1, 2) * b[i];
    REQUIRE(line_contains_point(ab, PointP3{z}).holds);
    CHECK(bracket(ab, PointP3{z}, PointP3{w}) == 0);
  }
}

TEST_CASE("contains-point conditions have rank 3") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto z = random_vec(rng);
    if (all_zero(z)) continue;
    const auto rows = contains_point_conditions(PointP3{z});
    QMatrix m(3, 6);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 6; ++k) m(i, k) = rows[i][k];
    CHECK(rank(m) == 3);
    const auto h = random_vec(rng);
    if (all_zero(h)) continue;
    const auto prow = in_plane_conditions(PlaneP3{h});
    QMatrix q(3, 6);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 6; ++k) q(i, k) = prow[i][k];
    CHECK(rank(q) == 3);
  }
}

TEST_CASE("line_in_plane") {
  const Pluecker e12{1, 0, 0, 0, 0, 0};
  CHECK(line_in_plane(e12, PlaneP3{{0, 0, 0, 1}}).holds);
  CHECK_FALSE(line_in_plane(e12, PlaneP3{{1, 0, 0, 0}}).holds);
  const Pluecker z12 = line_through(moment(1), moment(2));
  const PlaneP3 h = plane_through(moment(1), moment(2), moment(3));
  CHECK(incident(moment(1), h));
  CHECK(incident(moment(3), h));
  CHECK_FALSE(incident(moment(4), h));
  CHECK(line_in_plane(z12, h).holds);
  CHECK_FALSE(line_in_plane(line_through(moment(1), moment(4)), h).holds);
}

TEST_CASE("join and meet") {
  CHECK(line_through(pt(1, 0, 0, 0), pt(0, 1, 0, 0)) == Pluecker{1, 0, 0, 0, 0, 0});
  CHECK(projectively_equal(intersect(PlaneP3{{0, 0, 1, 0}}, PlaneP3{{0, 0, 0, 1}}), Pluecker{1, 0, 0, 0, 0, 0}));

  const Pluecker z34 = line_through(moment(3), moment(4));
  const PlaneP3 h = plane_through(moment(1), moment(2), moment(3));
  const PointP3 x = intersect(z34, h);
  CHECK(incident(x, h));
  CHECK(line_contains_point(z34, x).holds);
  CHECK(projectively_equal(x.v, moment(3).v));

  // Meet of two planes through a common line recovers it.
  const Pluecker l = line_through(moment(2), moment(5));
  const PlaneP3 h1 = plane_through(l, moment(1)), h2 = plane_through(l, moment(3));
  CHECK(projectively_equal(intersect(h1, h2), l));
  CHECK_THROWS_AS(plane_through(l, moment(2)), ValidationError);
  CHECK_THROWS_AS(intersect(l, plane_through(l, moment(7))), ValidationError);
}

TEST_CASE("chart coordinates") {
  const Chart c12(1, 2);
  CHECK(c12.name() == "p12");
  CHECK(chart_coords(Pluecker{1, 0, 0, 0, 0, 0}, c12) == Vec4<Rat>{0, 0, 0, 0});
  const Pluecker p{1, 2, 3, 1, 2, 1};
  CHECK(chart_coords(p, c12) == Vec4<Rat>{2, 3, 1, 2});
  CHECK(chart_point({2, 3, 1, 2}, c12) == p);
  CHECK_THROWS_AS(chart_coords(Pluecker{0, 0, 0, 0, 0, 1}, c12), ValidationError);

  std::mt19937 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_vec(rng), b = random_vec(rng);
    const auto v = join(a, b);
    if (all_zero(v)) continue;
    const Pluecker ab(v);
    for (const Chart& c : all_charts()) {
      if (!in_chart(ab, c)) continue;
      CHECK(projectively_equal(chart_point(chart_coords(ab, c), c), ab));
    }
  }
}

TEST_CASE("chart polynomials satisfy the Pluecker relation identically") {
  for (const Chart& c : all_charts()) {
    const auto p = chart_polynomials(c);
    CHECK(plucker_relation(p).is_zero());
    CHECK(p[static_cast<std::size_t>(c.pivot())] == PolyQ(4, Rat(1)));
  }
  const auto p = chart_polynomials(Chart(1, 2));
  const PolyQ x1 = PolyQ::variable(4, 0), x2 = PolyQ::variable(4, 1), x3 = PolyQ::variable(4, 2), x4 = PolyQ::variable(4, 3);
  CHECK(p[5] == x1 * x4 - x2 * x3);
}
