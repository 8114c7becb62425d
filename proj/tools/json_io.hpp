#pragma once

// JSON encodings of the library types. Every rational is a decimal string
// "p" or "p/q"; no floating point values are written.

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>
#include <openssl/evp.h>

#include "ampli/adjoint.hpp"
#include "ampli/canonical.hpp"
#include "ampli/membership.hpp"
#include "ampli/strata.hpp"
#include "ampli/zinput.hpp"

namespace ampli::io {

using json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

inline json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(origin + ": " + e.what());
  }
}

inline json load_json(const std::string& path) { return parse_json(read_file(path), path); }

/// Pretty-printed with a trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw IoError("SHA-256 failed");
  std::ostringstream ss;
  for (unsigned int i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return ss.str();
}

// ---------------------------------------------------------------------------
// Scalars and vectors.

inline Rat rat_from(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw ValidationError("expected a rational string or integer, got " + j.dump());
}

template <class Range>
json rats_to(const Range& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(Rat(x)));
  return a;
}

inline QVector rats_from(const json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected)
    throw ValidationError("expected an array of " + std::to_string(expected) + " rationals");
  QVector v;
  for (const auto& x : j) v.push_back(rat_from(x));
  return v;
}

inline json matrix_to(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(rats_to(m.row(r)));
  return rows;
}

inline QMatrix matrix_from(const json& rows, std::size_t cols) {
  if (!rows.is_array() || rows.empty()) throw ValidationError("expected a nonempty array of rows");
  std::vector<QVector> v;
  for (const auto& r : rows) v.push_back(rats_from(r, cols));
  return QMatrix::from_rows(v, cols);
}

inline Plk6<Rat> plk6_from(const json& j) {
  const QVector v = rats_from(j, 6);
  Plk6<Rat> p;
  std::copy(v.begin(), v.end(), p.begin());
  return p;
}

// ---------------------------------------------------------------------------
// Z.

inline json z_to(const ZMatrix& z) { return json{{"n", z.n()}, {"rows", matrix_to(z.matrix())}}; }

inline ZMatrix z_from(const json& j) {
  if (!j.is_object() || !j.contains("rows")) throw ValidationError("Z file needs a \"rows\" array");
  ZMatrix z(matrix_from(j.at("rows"), 4));
  if (j.contains("n") && j.at("n").get<int>() != z.n()) throw ValidationError("\"n\" does not match the row count");
  return z;
}

/// A line AB either as {"rows": 2x4} or {"pluecker": [6]}.
inline Pluecker line_from(const json& j) {
  if (j.contains("pluecker")) return Pluecker(plk6_from(j.at("pluecker")));
  if (j.contains("rows")) {
    const QMatrix m = matrix_from(j.at("rows"), 4);
    if (m.rows() != 2) throw ValidationError("a line needs exactly 2 rows");
    Vec4<Rat> a, b;
    for (std::size_t c = 0; c < 4; ++c) {
      a[c] = m(0, c);
      b[c] = m(1, c);
    }
    return Pluecker(join(a, b));
  }
  throw ValidationError("point file needs \"rows\" or \"pluecker\"");
}

// ---------------------------------------------------------------------------
// Verdicts, strata, adjoint, residues.

inline json verdict_to(const MembershipVerdict& v) {
  json signs = json::array();
  for (int s : v.cyclic_signs) signs.push_back(s > 0 ? "+" : s < 0 ? "-" : "0");
  return json{{"in_open_part", v.in_open_part},
              {"cyclic_signs", signs},
              {"flip_count", v.flip_count},
              {"certificate", to_string(v.certificate)}};
}

inline json stratum_id_to(const StratumId& id) {
  return json{{"dim", type_dim(id.type)}, {"type_tag", type_tag(id.type)}, {"indices", id.indices}};
}

inline json vertex_point_to(const VertexPoint& vp) {
  if (const auto* p = std::get_if<Pluecker>(&vp)) return json{{"pluecker", rats_to(p->coords())}};
  const auto& q = std::get<QuadraticPair>(vp);
  return json{{"quadratic_pair",
               {{"base0", rats_to(q.base0)},
                {"base1", rats_to(q.base1)},
                {"a", to_string(q.a)},
                {"b", to_string(q.b)},
                {"c", to_string(q.c)},
                {"discriminant", to_string(q.discriminant())}}}};
}

inline json counts_to(const std::array<std::int64_t, 14>& c) {
  json o = json::object();
  for (auto t : kAllTypes) o[type_tag(t)] = c[static_cast<std::size_t>(t)];
  return o;
}

inline json strata_report(const ZMatrix& z, bool with_vertices) {
  const int n = z.n();
  const auto infos = enumerate_strata(n);
  std::array<std::int64_t, 14> counts{};
  for (const auto& s : infos) ++counts[static_cast<std::size_t>(s.id.type)];
  json list = json::array();
  for (const auto& s : infos) {
    json e = stratum_id_to(s.id);
    json conds = json::array();
    for (const auto& c : s.schubert) conds.push_back(to_string(c, n));
    e["schubert"] = conds;
    e["degree"] = s.degree;
    e["residual"] = s.residual;
    if (s.kind) e["kind"] = to_string(*s.kind);
    if (with_vertices && s.id.dim() == 0) e["point"] = vertex_point_to(vertex_point(s.id, z));
    list.push_back(std::move(e));
  }
  return json{{"n", n},
              {"counts", counts_to(counts)},
              {"closed_form_counts", counts_to(closed_form_counts(n))},
              {"residual_count", residual_count(n)},
              {"strata", list}};
}

inline json adjoint_to(const AdjointPoly& a) {
  json terms = json::array();
  for (std::size_t k = 0; k < a.basis.size(); ++k) {
    if (a.coeffs[k] == 0) continue;
    const auto& e = a.basis.monomials[k];
    terms.push_back(json{{"monomial", std::vector<int>(e.begin(), e.end())}, {"coeff", to_string(a.coeffs[k])}});
  }
  return json{{"degree", a.basis.degree}, {"terms", terms}};
}

inline AdjointPoly adjoint_from(const json& j) {
  if (!j.contains("degree") || !j.contains("terms")) throw ValidationError("adjoint file needs \"degree\" and \"terms\"");
  const int d = j.at("degree").get<int>();
  if (d < 0) throw ValidationError("negative adjoint degree");
  AdjointPoly a{gr_basis(static_cast<unsigned>(d)), {}};
  a.coeffs.assign(a.basis.size(), Rat(0));
  for (const auto& t : j.at("terms")) {
    const auto m = t.at("monomial").get<std::vector<int>>();
    if (m.size() != 6) throw ValidationError("a monomial has 6 exponents");
    Exponent e{};
    for (std::size_t k = 0; k < 6; ++k) {
      if (m[k] < 0) throw ValidationError("negative exponent");
      e[k] = static_cast<std::uint16_t>(m[k]);
    }
    if (total_degree(e) != static_cast<unsigned>(d)) throw ValidationError("monomial degree differs from \"degree\"");
    a.coeffs[a.basis.index_of(e)] += rat_from(t.at("coeff"));
  }
  return a;
}

inline json residues_to(const Normalization& r) {
  json list = json::array();
  for (const auto& x : r.reports)
    list.push_back(json{{"vertex", stratum_id_to(x.vertex)}, {"flag", x.flag}, {"chart", x.chart_used}, {"residue", to_string(x.value)}});
  return json{{"scale", to_string(r.scale)}, {"verified", r.verified}, {"residues", list}};
}

inline json facet_check_to(const FacetCheck& c) {
  return json{{"facet", c.facet},
              {"boundary_samples", c.boundary_samples},
              {"boundary_poles", c.boundary_poles},
              {"residual_samples", c.residual_samples},
              {"residual_zeros", c.residual_zeros},
              {"interior_samples", c.interior_samples},
              {"interior_finite", c.interior_finite},
              {"ok", c.ok()}};
}

inline json polygon_demo_to(const std::vector<Point2>& vertices, const PolygonDemo& d) {
  json verts = json::array();
  for (const auto& v : vertices) verts.push_back(rats_to(std::vector<Rat>{v.x, v.y}));
  json edges = json::array();
  for (const auto& e : d.edges)
    edges.push_back(json{{"edge", e.edge + 1},
                         {"line", rats_to(e.line)},
                         {"coordinate", std::string(1, e.coordinate)},
                         {"residue_numerator", e.density.num().to_string(std::string(1, e.coordinate))},
                         {"residue_denominator", e.density.den().to_string(std::string(1, e.coordinate))},
                         {"start_vertex_residue", to_string(e.start_residue)},
                         {"end_vertex_residue", to_string(e.end_residue)}});
  return json{{"vertices", verts},
              {"adjoint", d.adjoint.to_string({"x", "y"})},
              {"scale", to_string(d.scale)},
              {"edges", edges},
              {"all_unit", d.all_unit}};
}

}  // namespace ampli::io
