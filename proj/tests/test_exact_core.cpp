#include <catch_amalgamated.hpp>

#include <random>

#include "ampli/matrix.hpp"
#include "ampli/poly.hpp"
#include "ampli/rational.hpp"

using namespace ampli;

namespace {

Rat random_rat(std::mt19937& rng, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, 5);
  return make_rat(num(rng), den(rng));
}

QMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int sparsity = 3) {
  QMatrix m(r, c);
  std::uniform_int_distribution<int> coin(0, sparsity);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng) != 0) m(i, j) = random_rat(rng);
  return m;
}

PolyQ random_poly(std::mt19937& rng, std::size_t nvars) {
  PolyQ p(nvars);
  std::uniform_int_distribution<int> deg(0, 2);
  for (int t = 0; t < 4; ++t) {
    Exponent e{};
    for (std::size_t i = 0; i < nvars; ++i) e[i] = static_cast<std::uint16_t>(deg(rng));
    p.add_term(e, random_rat(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(parse_rat("-7")) == "-7");
  CHECK(to_string(parse_rat("0/5")) == "0");
  CHECK_THROWS_AS(parse_rat("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rat("1.5"), ValidationError);
  CHECK_THROWS_AS(parse_rat("1/-2"), ValidationError);
  CHECK_THROWS_AS(parse_rat(""), ValidationError);
  CHECK_THROWS_AS(parse_rat(" 1"), ValidationError);
}

TEST_CASE("primitive keeps direction and sign") {
  const QVector v{Rat(1, 2), Rat(-3, 4), 0};
  const QVector p = primitive(v);
  CHECK(p == QVector{2, -3, 0});
}

TEST_CASE("kernel small cases") {
  CHECK(kernel(QMatrix::identity(2)).empty());
  const auto k = kernel(QMatrix{{1, 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(k[0][0] != 0);
}

TEST_CASE("det4 examples") {
  CHECK(det4(QMatrix::identity(4)) == 1);
  CHECK(det4(QMatrix{{1, 2, 1, 4}, {0, 1, 0, 2}, {3, 5, 3, 1}, {7, 1, 7, 0}}) == 0);
  QMatrix v(4, 4);
  for (int i = 0; i < 4; ++i) {
    Rat t = i + 1, pw = 1;
    for (int j = 0; j < 4; ++j, pw *= t) v(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = pw;
  }
  CHECK(det4(v) == 12);
  CHECK_THROWS_AS(det4(QMatrix(3, 3)), ValidationError);
}

TEST_CASE("det matches cofactor expansion with rational entries") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    QMatrix m = random_matrix(rng, 3, 3, 6);
    const Rat cof = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                    m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                    m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    CHECK(det(m) == cof);
  }
}

TEST_CASE("rank-nullity and exact kernel vectors") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> dim(1, 7);
    const auto r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    QMatrix m = random_matrix(rng, r, c);
    // Force some dependent rows.
    if (r >= 3)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Rat(2, 3) - m(1, j);
    const auto ker = kernel(m);
    CHECK(rank(m) + ker.size() == c);
    for (const auto& v : ker) {
      const QVector mv = m.apply(v);
      for (const auto& x : mv) CHECK(x == 0);
    }
  }
}

TEST_CASE("solve returns a particular solution or reports inconsistency") {
  const QMatrix a{{1, 2}, {2, 4}};
  QVector x;
  CHECK(solve(a, {3, 6}, x));
  CHECK(a.apply(x) == QVector{3, 6});
  CHECK_FALSE(solve(a, {3, 7}, x));
}

TEST_CASE("PolyQ is a commutative ring") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const PolyQ a = random_poly(rng, 3), b = random_poly(rng, 3), c = random_poly(rng, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("PolyQ evaluation, derivative and substitution") {
  const PolyQ x = PolyQ::variable(2, 0), y = PolyQ::variable(2, 1);
  const PolyQ p = x * x * y - Rat(3) * y + PolyQ(2, 5);
  const std::vector<Rat> pt{2, Rat(1, 3)};
  CHECK(p.evaluate(pt) == Rat(4, 3) - 1 + 5);
  CHECK(p.derivative(0) == Rat(2) * x * y);
  CHECK(p.degree() == 3);
  CHECK_FALSE(p.is_homogeneous(3));
  // x -> t, y -> 2t + 1
  const std::vector<UPoly> vals{UPoly::x(), UPoly(std::vector<Rat>{1, 2})};
  const UPoly u = substitute<UPoly>(p, vals, UPoly(1));
  for (int t = -2; t <= 2; ++t) {
    const std::vector<Rat> q{t, Rat(2 * t + 1)};
    CHECK(u(Rat(t)) == p.evaluate(q));
  }
  CHECK(p.to_string({"x", "y"}) == "x^2*y - 3*y + 5");
}

TEST_CASE("UPoly division and gcd") {
  const UPoly t = UPoly::x();
  const UPoly a = (t - 1) * (t - 2) * (t + 3), b = (t - 1) * (t + 5);
  const auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK(gcd(a, b) == t - 1);
}

TEST_CASE("RatFun1 is reduced with monic denominator") {
  const UPoly t = UPoly::x();
  const RatFun1 f((t - 1) * Rat(6), (t - 1) * (t * Rat(2) + 4));
  CHECK(f.num() == UPoly(3));
  CHECK(f.den() == t + 2);
  CHECK_THROWS_AS(RatFun1(t, UPoly()), ValidationError);
}

TEST_CASE("residues of the segment form") {
  // (b - a) / ((x - a)(b - x)) with a = 0, b = 1
  const UPoly x = UPoly::x();
  const RatFun1 f(UPoly(1), x * (UPoly(1) - x));
  CHECK(residue_at(f, 0) == 1);
  CHECK(residue_at(f, 1) == -1);
  CHECK(residue_at(RatFun1(UPoly(1), x), 0) == 1);
  CHECK_THROWS_AS(residue_at(f, 2), ValidationError);
  CHECK_THROWS_AS(residue_at(RatFun1(UPoly(1), x * x), 0), ValidationError);
}

TEST_CASE("residue_at agrees with division-based Laurent coefficient") {
  std::mt19937 rng(19);
  int done = 0;
  while (done < 20) {
    const Rat t0 = random_rat(rng);
    std::vector<Rat> qc(3), nc(3);
    for (auto& c : qc) c = random_rat(rng);
    for (auto& c : nc) c = random_rat(rng);
    const UPoly q(qc), num(nc);
    if (q.is_zero() || q(t0) == 0 || num(t0) == 0) continue;
    const UPoly lin = UPoly::x() - t0;
    const UPoly den = lin * q;
    // Coefficient of 1/(t - t0): divide the denominator by (t - t0) exactly,
    // then the residue is num(t0) / quotient(t0).
    const auto [quot, rem] = divmod(den, lin);
    REQUIRE(rem.is_zero());
    CHECK(residue_at(RatFun1(num, den), t0) == num(t0) / quot(t0));
    ++done;
  }
}
