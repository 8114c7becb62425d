#pragma once

// Strata of the algebraic boundary of the m=2, k=2 amplituhedron: the 14
// types, their Schubert conditions, counts, vertex incidences, exact vertex
// points and rational parametrizations of the residual lines and conics.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ampli/combinatorics.hpp"
#include "ampli/error.hpp"
#include "ampli/grassmann.hpp"
#include "ampli/matrix.hpp"
#include "ampli/poly.hpp"
#include "ampli/zinput.hpp"

namespace ampli {

enum class StratumType { t3I, t2I, t2II, t2III, t1I, t1II, t1III, t1IV, t0I, t0II, t0III, t0IV, t0V, t0VI };

inline constexpr std::array<StratumType, 14> kAllTypes{
    StratumType::t3I,  StratumType::t2I,  StratumType::t2II,  StratumType::t2III, StratumType::t1I,
    StratumType::t1II, StratumType::t1III, StratumType::t1IV, StratumType::t0I,   StratumType::t0II,
    StratumType::t0III, StratumType::t0IV, StratumType::t0V,  StratumType::t0VI};

inline int type_dim(StratumType t) {
  switch (t) {
    case StratumType::t3I: return 3;
    case StratumType::t2I:
    case StratumType::t2II:
    case StratumType::t2III: return 2;
    case StratumType::t1I:
    case StratumType::t1II:
    case StratumType::t1III:
    case StratumType::t1IV: return 1;
    default: return 0;
  }
}

inline std::string type_roman(StratumType t) {
  static const char* names[] = {"I", "I", "II", "III", "I", "II", "III", "IV", "I", "II", "III", "IV", "V", "VI"};
  return names[static_cast<int>(t)];
}

/// Short tag such as "1III".
inline std::string type_tag(StratumType t) { return std::to_string(type_dim(t)) + type_roman(t); }

inline StratumType parse_type_tag(const std::string& s) {
  for (auto t : kAllTypes)
    if (type_tag(t) == s) return t;
  throw ValidationError("unknown stratum type: " + s);
}

inline std::size_t type_arity(StratumType t) {
  switch (t) {
    case StratumType::t3I:
    case StratumType::t2I:
    case StratumType::t2II:
    case StratumType::t1I: return 1;
    case StratumType::t1IV:
    case StratumType::t0IV:
    case StratumType::t0V: return 3;
    case StratumType::t0VI: return 4;
    default: return 2;
  }
}

/// Table degree column.
inline int type_degree(StratumType t) {
  return t == StratumType::t2III || t == StratumType::t1IV || t == StratumType::t0VI ? 2 : 1;
}

struct StratumId {
  StratumType type = StratumType::t3I;
  std::vector<int> indices;

  int dim() const { return type_dim(type); }
  friend bool operator==(const StratumId& a, const StratumId& b) {
    return a.type == b.type && a.indices == b.indices;
  }
  friend bool operator<(const StratumId& a, const StratumId& b) {
    return a.type != b.type ? a.type < b.type : a.indices < b.indices;
  }
};

/// "(1,III,1,4)"
inline std::string to_string(const StratumId& id) {
  std::string s = "(" + std::to_string(id.dim()) + "," + type_roman(id.type);
  for (int i : id.indices) s += "," + std::to_string(i);
  return s + ")";
}

// ---------------------------------------------------------------------------
// Index rules.

namespace detail {

inline bool edges_disjoint(int s, int t, int n) { return cyclic_distance(s, t, n) >= 2; }

/// {i-1, i, i+1} disjoint from the edge {j, j+1}.
inline bool plane_edge_disjoint(int i, int j, int n) {
  for (int d = -2; d <= 1; ++d)
    if (cyc(i + d, n) == cyc(j, n)) return false;
  return true;
}

inline bool point_off_edge(int i, int j, int n) { return cyc(i, n) != cyc(j, n) && cyc(i, n) != cyc(j + 1, n); }

inline bool pairwise_disjoint(const std::vector<int>& e, int n) {
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = a + 1; b < e.size(); ++b)
      if (!edges_disjoint(e[a], e[b], n)) return false;
  return true;
}

}  // namespace detail

/// Reduces indices mod n and sorts the unordered groups.
inline StratumId canonical(StratumId id, int n) {
  for (int& i : id.indices) i = cyc(i, n);
  auto& v = id.indices;
  switch (id.type) {
    case StratumType::t2III:
    case StratumType::t1IV:
    case StratumType::t0I:
    case StratumType::t0II:
    case StratumType::t0VI: std::sort(v.begin(), v.end()); break;
    case StratumType::t0IV:
    case StratumType::t0V: std::sort(v.begin() + 1, v.end()); break;
    default: break;
  }
  return id;
}

inline bool is_valid(const StratumId& id, int n) {
  if (id.indices.size() != type_arity(id.type)) return false;
  for (int i : id.indices)
    if (i < 1 || i > n) return false;
  const auto& v = id.indices;
  using namespace detail;
  switch (id.type) {
    case StratumType::t3I:
    case StratumType::t2I:
    case StratumType::t2II:
    case StratumType::t1I: return true;
    case StratumType::t2III: return edges_disjoint(v[0], v[1], n);
    case StratumType::t1II: return point_off_edge(v[0], v[1], n);
    case StratumType::t1III:
    case StratumType::t0III: return plane_edge_disjoint(v[0], v[1], n);
    case StratumType::t1IV:
    case StratumType::t0VI: return pairwise_disjoint(v, n);
    case StratumType::t0I: return v[0] != v[1];
    case StratumType::t0II: return cyclic_distance(v[0], v[1], n) >= 3;
    case StratumType::t0IV:
      return edges_disjoint(v[1], v[2], n) && point_off_edge(v[0], v[1], n) && point_off_edge(v[0], v[2], n);
    case StratumType::t0V:
      return edges_disjoint(v[1], v[2], n) && plane_edge_disjoint(v[0], v[1], n) &&
             plane_edge_disjoint(v[0], v[2], n);
  }
  return false;
}

inline bool classify_residual(const StratumId& id) {
  switch (id.type) {
    case StratumType::t1III:
    case StratumType::t1IV:
    case StratumType::t0II:
    case StratumType::t0III:
    case StratumType::t0IV:
    case StratumType::t0V:
    case StratumType::t0VI: return true;
    default: return false;
  }
}

// ---------------------------------------------------------------------------
// Schubert conditions.

enum class ConditionKind { line, point, plane };

/// line: meets Z_a Z_b; point: passes through Z_a; plane: lies in Z_{a-1} Z_a Z_{a+1}.
struct SchubertCondition {
  ConditionKind kind;
  std::vector<int> idx;
};

inline std::string to_string(const SchubertCondition& c, int n) {
  auto s = [n](int i) { return std::to_string(cyc(i, n)); };
  switch (c.kind) {
    case ConditionKind::line: return "L_{" + s(c.idx[0]) + "," + s(c.idx[1]) + "}";
    case ConditionKind::point: return "V_{" + s(c.idx[0]) + "}";
    case ConditionKind::plane: return "P_{" + s(c.idx[0] - 1) + "," + s(c.idx[0]) + "," + s(c.idx[0] + 1) + "}";
  }
  return "?";
}

inline std::vector<SchubertCondition> schubert_conditions(const StratumId& id) {
  const auto& v = id.indices;
  auto L = [](int a) { return SchubertCondition{ConditionKind::line, {a, a + 1}}; };
  auto V = [](int a) { return SchubertCondition{ConditionKind::point, {a}}; };
  auto P = [](int a) { return SchubertCondition{ConditionKind::plane, {a}}; };
  auto Lskip = [](int a) { return SchubertCondition{ConditionKind::line, {a - 1, a + 1}}; };
  switch (id.type) {
    case StratumType::t3I: return {L(v[0])};
    case StratumType::t2I: return {V(v[0])};
    case StratumType::t2II: return {P(v[0])};
    case StratumType::t2III: return {L(v[0]), L(v[1])};
    case StratumType::t1I: return {V(v[0]), Lskip(v[0])};
    case StratumType::t1II: return {V(v[0]), L(v[1])};
    case StratumType::t1III: return {P(v[0]), L(v[1])};
    case StratumType::t1IV: return {L(v[0]), L(v[1]), L(v[2])};
    case StratumType::t0I: return {V(v[0]), V(v[1])};
    case StratumType::t0II: return {P(v[0]), P(v[1])};
    case StratumType::t0III: return {V(v[0]), Lskip(v[0]), L(v[1])};
    case StratumType::t0IV: return {V(v[0]), L(v[1]), L(v[2])};
    case StratumType::t0V: return {P(v[0]), L(v[1]), L(v[2])};
    case StratumType::t0VI: return {L(v[0]), L(v[1]), L(v[2]), L(v[3])};
  }
  return {};
}

inline std::vector<LinearForm6> condition_forms(const SchubertCondition& c, const ZMatrix& z) {
  switch (c.kind) {
    case ConditionKind::line: {
      const auto f = meets_line_condition(z.line(c.idx[0], c.idx[1]));
      return {f};
    }
    case ConditionKind::point: return contains_point_conditions(z.point(c.idx[0]));
    case ConditionKind::plane: return in_plane_conditions(z.plane(c.idx[0] - 1, c.idx[0], c.idx[0] + 1));
  }
  return {};
}

inline bool satisfies(const SchubertCondition& c, const Plk6<Rat>& p, const ZMatrix& z) {
  for (const auto& f : condition_forms(c, z))
    if (apply(f, p) != 0) return false;
  return true;
}

inline bool satisfies_all(const StratumId& id, const Plk6<Rat>& p, const ZMatrix& z) {
  for (const auto& c : schubert_conditions(id))
    if (!satisfies(c, p, z)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration and counts.

enum class ResidualKind { first, second, third };

inline std::string to_string(ResidualKind k) {
  return k == ResidualKind::first ? "first" : k == ResidualKind::second ? "second" : "third";
}

struct StratumInfo {
  StratumId id;
  std::vector<SchubertCondition> schubert;
  int degree = 1;
  bool residual = false;
  std::optional<ResidualKind> kind;
};

/// Cyclic gap between the index sets {a..a+la} and {b..b+lb}; 0 if they meet.
inline int block_distance(int a, int la, int b, int lb, int n) {
  int best = n;
  for (int x = 0; x <= la; ++x)
    for (int y = 0; y <= lb; ++y) best = std::min(best, cyclic_distance(a + x, b + y, n));
  return best;
}

/// Kind of a residual line (1,III) or conic (1,IV) by cyclic distances.
inline ResidualKind residual_kind(const StratumId& id, int n) {
  const auto& v = id.indices;
  if (id.type == StratumType::t1III)
    return block_distance(v[0] - 1, 2, v[1], 1, n) == 1 ? ResidualKind::first : ResidualKind::second;
  if (id.type == StratumType::t1IV) {
    std::array<std::array<bool, 3>, 3> near{};
    int pairs = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        near[a][b] = near[b][a] = block_distance(v[a], 1, v[b], 1, n) == 1;
        pairs += near[a][b];
      }
    for (int a = 0; a < 3; ++a)
      if (near[a][(a + 1) % 3] && near[a][(a + 2) % 3]) return ResidualKind::first;
    return pairs == 1 ? ResidualKind::second : ResidualKind::third;
  }
  throw ValidationError("residual_kind applies to (1,III) and (1,IV) only");
}

inline StratumInfo stratum_info(const StratumId& id, int n) {
  StratumInfo info{id, schubert_conditions(id), type_degree(id.type), classify_residual(id), std::nullopt};
  if (id.type == StratumType::t1III || id.type == StratumType::t1IV) info.kind = residual_kind(id, n);
  return info;
}

inline std::vector<StratumId> enumerate_type(StratumType t, int n) {
  const std::size_t k = type_arity(t);
  std::set<StratumId> out;
  std::vector<int> idx(k, 1);
  for (;;) {
    StratumId id = canonical(StratumId{t, idx}, n);
    if (is_valid(id, n)) out.insert(id);
    std::size_t p = 0;
    while (p < k && idx[p] == n) idx[p++] = 1;
    if (p == k) break;
    ++idx[p];
  }
  return {out.begin(), out.end()};
}

inline std::vector<StratumInfo> enumerate_strata(int n) {
  if (n < 4) throw ValidationError("n must be at least 4");
  std::vector<StratumInfo> out;
  for (auto t : kAllTypes)
    for (auto& id : enumerate_type(t, n)) out.push_back(stratum_info(id, n));
  return out;
}

/// Closed-form number of strata per type, in kAllTypes order. For n = 4 the
/// (0,II) and (0,VI) polynomials are negative and are clamped to zero.
inline std::array<std::int64_t, 14> closed_form_counts(std::int64_t n) {
  auto clamp = [](std::int64_t x) { return std::max<std::int64_t>(0, x); };
  return {n,
          n,
          n,
          binom(n, 2) - n,
          n,
          n * (n - 2),
          n * (n - 4),
          binom(n, 3) - n * (n - 3),
          binom(n, 2),
          clamp(n * (n - 5) / 2),
          n * (n - 4),
          n * binom(n - 3, 2),
          n * binom(n - 5, 2),
          clamp(n * (n - 5) * (n - 6) * (n - 7) / 24)};
}

/// Number of residual vertices from the quartic closed form, cross-checked
/// against the per-type sum with (0,VI) strata counted twice.
inline std::int64_t residual_count(std::int64_t n) {
  if (n < 4) throw ValidationError("n must be at least 4");
  const std::int64_t num = n * n * n * n - 6 * n * n * n + 17 * n * n - 36 * n;
  if (num % 12 != 0) throw ClaimError("residual count is not an integer");
  const auto c = closed_form_counts(n);
  const std::int64_t sum = c[9] + c[10] + c[11] + c[12] + 2 * c[13];
  if (sum != num / 12) throw ClaimError("residual count formula disagrees with the per-type sum");
  return num / 12;
}

// ---------------------------------------------------------------------------
// Incidence of vertices in one-dimensional strata.

/// One-dimensional strata containing a vertex. Where a (1,IV) triple would
/// have two adjacent edges, the vertex lies on the corresponding (1,III)
/// line instead.
inline std::vector<StratumId> incidence_vertices(const StratumId& id, int n) {
  if (id.dim() != 0 || !is_valid(id, n)) throw ValidationError("incidence_vertices expects a valid vertex");
  const auto& v = id.indices;
  using T = StratumType;
  std::vector<StratumId> out;
  auto add = [&](T t, std::vector<int> idx) { out.push_back(canonical(StratumId{t, std::move(idx)}, n)); };
  switch (id.type) {
    case T::t0I: {
      int i = v[0], j = v[1];
      if (cyc(i + 1, n) != j && cyc(j + 1, n) != i) {
        add(T::t1II, {i, j});
        add(T::t1II, {i, j - 1});
        add(T::t1II, {j, i});
        add(T::t1II, {j, i - 1});
        break;
      }
      if (cyc(j + 1, n) == i) std::swap(i, j);  // now j = i + 1
      add(T::t1I, {i});
      add(T::t1I, {i + 1});
      add(T::t1II, {i, i + 1});
      add(T::t1II, {i + 1, i - 1});
      break;
    }
    case T::t0II:
      add(T::t1III, {v[0], v[1]});
      add(T::t1III, {v[0], v[1] - 1});
      add(T::t1III, {v[1], v[0]});
      add(T::t1III, {v[1], v[0] - 1});
      break;
    case T::t0III:
      add(T::t1I, {v[0]});
      add(T::t1II, {v[0], v[1]});
      add(T::t1III, {v[0], v[1]});
      break;
    case T::t0IV: {
      const int i = v[0], j = v[1], k = v[2];
      add(T::t1II, {i, j});
      add(T::t1II, {i, k});
      auto conic_or_line = [&](int e, int through) {
        // e is the edge {through-1, through} or {through, through+1} next to Z_i.
        for (int m : {j, k}) {
          const int other = m == j ? k : j;
          if (!detail::edges_disjoint(e, m, n)) {
            add(T::t1III, {through, other});
            return;
          }
        }
        add(T::t1IV, {e, j, k});
      };
      conic_or_line(i - 1, i - 1);
      conic_or_line(i, i + 1);
      break;
    }
    case T::t0V:
      add(T::t1III, {v[0], v[1]});
      add(T::t1III, {v[0], v[2]});
      add(T::t1IV, {v[0] - 1, v[1], v[2]});
      add(T::t1IV, {v[0], v[1], v[2]});
      break;
    case T::t0VI:
      add(T::t1IV, {v[0], v[1], v[2]});
      add(T::t1IV, {v[0], v[1], v[3]});
      add(T::t1IV, {v[0], v[2], v[3]});
      add(T::t1IV, {v[1], v[2], v[3]});
      break;
    default: break;
  }
  for (const auto& s : out)
    if (!is_valid(s, n)) throw ClaimError("incidence produced invalid stratum " + to_string(s));
  return out;
}

/// Vertex types on a one-dimensional stratum, with (0,VI) strata counted
/// as two points.
inline std::map<StratumType, int> vertex_census(const StratumId& curve, int n) {
  std::map<StratumType, int> census;
  for (auto t : {StratumType::t0I, StratumType::t0II, StratumType::t0III, StratumType::t0IV, StratumType::t0V,
                 StratumType::t0VI})
    for (const auto& v : enumerate_type(t, n)) {
      const auto inc = incidence_vertices(v, n);
      if (std::find(inc.begin(), inc.end(), curve) != inc.end()) census[t] += t == StratumType::t0VI ? 2 : 1;
    }
  return census;
}

// ---------------------------------------------------------------------------
// Exact vertex points.

/// The two lines of a (0,VI) vertex: p(t) = base0 + t base1 with
/// a t^2 + b t + c = 0 (the Pluecker relation on the pencil).
struct QuadraticPair {
  Plk6<Rat> base0{}, base1{};
  Rat a, b, c;
  Rat discriminant() const { return b * b - 4 * a * c; }
};

using VertexPoint = std::variant<Pluecker, QuadraticPair>;

inline QMatrix stacked_conditions(const StratumId& id, const ZMatrix& z) {
  std::vector<QVector> rows;
  for (const auto& c : schubert_conditions(id))
    for (const auto& f : condition_forms(c, z)) rows.emplace_back(f.begin(), f.end());
  return QMatrix::from_rows(rows, 6);
}

inline VertexPoint vertex_point(const StratumId& id, const ZMatrix& z) {
  const int n = z.n();
  if (id.dim() != 0 || !is_valid(id, n)) throw ValidationError("vertex_point expects a valid vertex");
  const auto ker = kernel(stacked_conditions(id, z));
  auto to6 = [](const QVector& v) {
    Plk6<Rat> p;
    std::copy(v.begin(), v.end(), p.begin());
    return p;
  };
  if (id.type == StratumType::t0VI) {
    if (ker.size() != 2) throw ClaimError("non-generic Z: pencil of " + to_string(id) + " has wrong dimension");
    QuadraticPair q{to6(ker[0]), to6(ker[1]), 0, 0, 0};
    q.a = plucker_relation(q.base1);
    q.b = pairing(q.base0, q.base1);
    q.c = plucker_relation(q.base0);
    if (q.a == 0 && q.b == 0 && q.c == 0) throw ClaimError("non-generic Z: pencil lies on the Grassmannian");
    return q;
  }
  if (ker.size() != 1) throw ClaimError("non-generic Z: kernel of " + to_string(id) + " has wrong dimension");
  const Plk6<Rat> p = to6(ker[0]);
  if (plucker_relation(p) != 0) throw ClaimError("vertex " + to_string(id) + " is off the Grassmannian");
  if (!satisfies_all(id, p, z)) throw ClaimError("vertex " + to_string(id) + " fails its conditions");
  return Pluecker(p);
}

// ---------------------------------------------------------------------------
// Rational curves.

struct CurveParam {
  int component_degree = 1;
  Plk6<UPoly> pluecker;

  Plk6<Rat> at(const Rat& t) const {
    Plk6<Rat> p;
    for (std::size_t k = 0; k < 6; ++k) p[k] = pluecker[k](t);
    return p;
  }
  /// Leading coefficients: the curve point at t = infinity.
  Plk6<Rat> at_infinity() const {
    Plk6<Rat> p;
    for (std::size_t k = 0; k < 6; ++k) p[k] = pluecker[k].coeff(static_cast<std::size_t>(component_degree));
    return p;
  }
};

namespace detail {

inline Vec4<UPoly> lift(const Vec4<Rat>& v) { return {UPoly(v[0]), UPoly(v[1]), UPoly(v[2]), UPoly(v[3])}; }
inline Plk6<UPoly> lift(const Plk6<Rat>& p) {
  Plk6<UPoly> q;
  for (std::size_t k = 0; k < 6; ++k) q[k] = UPoly(p[k]);
  return q;
}

}  // namespace detail

/// Lines of (1,III,ij): through the point where Z_jZ_{j+1} meets the plane
/// Z_{i-1}Z_iZ_{i+1}, inside that plane.
inline CurveParam residual_line_param(const StratumId& id, const ZMatrix& z) {
  const int n = z.n();
  if (id.type != StratumType::t1III || !is_valid(id, n)) throw ValidationError("expected a valid (1,III) stratum");
  const int i = id.indices[0], j = id.indices[1];
  const Vec4<Rat> q = meet(z.edge(j), z.plane(i - 1, i, i + 1).h);
  if (all_zero(q)) throw ClaimError("non-generic Z: edge lies in the plane");
  const std::array<std::pair<int, int>, 3> pairs{{{i - 1, i}, {i - 1, i + 1}, {i, i + 1}}};
  for (const auto& [a, b] : pairs) {
    const Vec4<Rat> za = z.point(a).v, zb = z.point(b).v;
    const QMatrix m = QMatrix::from_rows(
        {QVector(q.begin(), q.end()), QVector(za.begin(), za.end()), QVector(zb.begin(), zb.end())}, 4);
    if (rank(m) != 3) continue;
    Vec4<UPoly> r;
    for (std::size_t c = 0; c < 4; ++c) r[c] = UPoly(za[c]) + UPoly::x() * zb[c];
    return CurveParam{1, join(detail::lift(q), r)};
  }
  throw ClaimError("non-generic Z: no pencil basis");
}

/// Lines of (1,IV,ijk) through p(t) = Z_i + t Z_{i+1} meeting Z_jZ_{j+1} and Z_kZ_{k+1}.
inline CurveParam residual_conic_param(const StratumId& id, const ZMatrix& z) {
  const int n = z.n();
  if (id.type != StratumType::t1IV || !is_valid(id, n)) throw ValidationError("expected a valid (1,IV) stratum");
  const int i = id.indices[0], j = id.indices[1], k = id.indices[2];
  Vec4<UPoly> p;
  for (std::size_t c = 0; c < 4; ++c) p[c] = UPoly(z.point(i).v[c]) + UPoly::x() * z.point(i + 1).v[c];
  const Vec4<UPoly> h1 = join(detail::lift(z.edge(j)), p);
  const Vec4<UPoly> h2 = join(detail::lift(z.edge(k)), p);
  CurveParam curve{2, meet(h1, h2)};
  bool nonzero = false;
  for (const auto& e : curve.pluecker) nonzero = nonzero || !e.is_zero();
  if (!nonzero) throw ClaimError("non-generic Z: degenerate conic");
  return curve;
}

/// <AB i(i+1)> along the curve.
inline UPoly restricted_bracket(const CurveParam& curve, const ZMatrix& z, int i) {
  return pairing(curve.pluecker, detail::lift(z.edge(i)));
}

/// Parameter value where the curve passes through p, if it does so at a
/// finite rational t.
inline std::optional<Rat> curve_parameter_of(const CurveParam& curve, const Plk6<Rat>& p) {
  UPoly g;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b) g = gcd(g, curve.pluecker[a] * p[b] - curve.pluecker[b] * p[a]);
  if (g.degree() != 1) return std::nullopt;
  const Rat t = -g.coeff(0) / g.coeff(1);
  if (all_zero(curve.at(t))) return std::nullopt;
  return t;
}

/// Distinct points of P^1 where a polynomial of formal degree d vanishes,
/// counting t = infinity when the degree drops. Roots are not solved for;
/// only the squarefree degree is returned.
inline int projective_root_count(const UPoly& f, int formal_degree) {
  if (f.is_zero()) return -1;
  const UPoly sq = f.degree() > 0 ? divmod(f, gcd(f, f.derivative())).first : UPoly(1);
  return sq.degree() + (f.degree() < formal_degree ? 1 : 0);
}

// ---------------------------------------------------------------------------
// One-skeleton on the (0,I) vertices.

struct Skeleton {
  std::vector<StratumId> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool connected = false;

  int degree(std::size_t v) const {
    int d = 0;
    for (const auto& [a, b] : edges) d += (a == v) + (b == v);
    return d;
  }
};

inline Skeleton one_skeleton(int n) {
  if (n < 4) throw ValidationError("n must be at least 4");
  Skeleton g;
  g.vertices = enumerate_type(StratumType::t0I, n);
  auto index_of = [&](int a, int b) {
    const StratumId id = canonical(StratumId{StratumType::t0I, {a, b}}, n);
    return static_cast<std::size_t>(std::lower_bound(g.vertices.begin(), g.vertices.end(), id) - g.vertices.begin());
  };
  for (int i = 1; i <= n; ++i) g.edges.emplace_back(index_of(i - 1, i), index_of(i, i + 1));
  for (const auto& s : enumerate_type(StratumType::t1II, n)) {
    const int i = s.indices[0], j = s.indices[1];
    g.edges.emplace_back(index_of(i, j), index_of(i, j + 1));
  }
  std::vector<std::vector<std::size_t>> adj(g.vertices.size());
  for (const auto& [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(g.vertices.size(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const auto v = todo.front();
    todo.pop();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        todo.push(w);
      }
  }
  g.connected = reached == g.vertices.size();
  return g;
}

}  // namespace ampli
