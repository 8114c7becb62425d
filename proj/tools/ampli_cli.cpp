// ampli: command-line front end.
//
// Exit codes: 0 success, 2 validation failure, 3 claim failure, 4 I/O.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "json_io.hpp"

using namespace ampli;
using io::json;

namespace {

constexpr int kOk = 0, kValidation = 2, kClaim = 3, kIo = 4;

/// Raised by a subcommand whose verification failed after producing output.
struct CheckFailed {
  int code;
  std::string message;
};

std::vector<Rat> parse_rat_list(const std::string& s) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_rat(item));
  return out;
}

std::vector<Point2> parse_vertices(const std::string& s) {
  std::vector<Point2> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto xy = parse_rat_list(item);
    if (xy.size() != 2) throw ValidationError("vertex \"" + item + "\" needs two coordinates");
    out.push_back({xy[0], xy[1]});
  }
  return out;
}

void emit(const json& j, const std::string& path) {
  if (path.empty() || path == "-")
    std::cout << io::dump(j);
  else
    io::write_file(path, io::dump(j));
}

ZMatrix load_z(const std::string& path) { return io::z_from(io::load_json(path)); }

json check_z_json(const ZMatrix& z) {
  return json{{"n", z.n()}, {"totally_positive", z.totally_positive()}, {"generic", z.generic()}};
}

void apply_jobs(unsigned cli_jobs) {
  unsigned jobs = cli_jobs;
  if (const char* env = std::getenv("AMPLI_JOBS"); env && *env) {
    try {
      jobs = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw ValidationError(std::string("AMPLI_JOBS is not a number: ") + env);
    }
  }
  set_max_jobs(jobs);
}

// ---------------------------------------------------------------------------
// Pipeline.

int run_pipeline(const std::string& z_path, const std::string& out_dir, bool timings) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw io::IoError("cannot create " + out_dir + ": " + ec.message());
  auto out = [&](const std::string& f) { return (fs::path(out_dir) / f).string(); };

  const std::string raw = io::read_file(z_path);
  json report{{"z_digest", "sha256:" + io::sha256_hex(raw)}};
  json times = json::object();
  std::string stage;
  auto clock = std::chrono::steady_clock::now();
  auto lap = [&] {
    const auto now = std::chrono::steady_clock::now();
    times[stage] = std::chrono::duration<double>(now - clock).count();
    clock = now;
  };
  auto finish = [&](int code, const std::string& message) {
    if (code != kOk) {
      report["failed_stage"] = stage;
      report["error"] = message;
    }
    if (timings) report["timings"] = times;
    io::write_file(out("report.json"), io::dump(report));
    if (code != kOk) std::cerr << "pipeline failed at stage " << stage << ": " << message << "\n";
    return code;
  };

  try {
    stage = "check-z";
    const ZMatrix z = io::z_from(io::parse_json(raw, z_path));
    report["n"] = z.n();
    io::write_file(out("z.json"), io::dump(io::z_to(z)));
    z.require_valid();
    lap();

    stage = "strata";
    const json strata = io::strata_report(z, true);
    io::write_file(out("strata.json"), io::dump(strata));
    report["stratum_counts"] = strata.at("counts");
    report["residual_count"] = strata.at("residual_count");
    if (strata.at("counts") != strata.at("closed_form_counts")) throw ClaimError("stratum counts differ from the closed forms");
    lap();

    stage = "adjoint";
    const auto ker = kernel(assemble_constraints(z));
    report["adjoint_degree"] = z.n() - 4;
    report["kernel_dim"] = ker.size();
    const AdjointPoly a = adjoint_from_kernel(z, ker);
    io::write_file(out("adjoint.json"), io::dump(io::adjoint_to(a)));
    lap();

    stage = "verify-canonical";
    FormAtlas atlas(z, a);
    const Normalization r = normalize(atlas, z);
    io::write_file(out("residues.json"), io::dump(io::residues_to(r)));
    report["residues_verified"] = r.verified;
    lap();
    if (!r.verified) return finish(kClaim, "some vertex residue is not +-1");
  } catch (const ValidationError& e) {
    return finish(kValidation, e.what());
  } catch (const ClaimError& e) {
    return finish(kClaim, e.what());
  } catch (const json::exception& e) {
    return finish(kValidation, e.what());
  }
  return finish(kOk, "");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification tools for the tree amplituhedron in Gr(2,4)"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned jobs = 1;
  app.add_option("--jobs,-j", jobs, "Worker threads (0 = hardware); AMPLI_JOBS overrides")->capture_default_str();

  // gen-z
  auto* gen = app.add_subcommand("gen-z", "Moment-curve Z at the given nodes");
  int gen_n = 0;
  std::string gen_nodes, gen_out;
  gen->add_option("--n", gen_n, "Number of points")->required();
  gen->add_option("--nodes", gen_nodes, "Comma-separated increasing positive rationals (default 1..n)");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // check-z
  auto* chk = app.add_subcommand("check-z", "Total positivity and genericity of Z");
  std::string chk_path;
  chk->add_option("z", chk_path, "Z file")->required();

  // membership
  auto* mem = app.add_subcommand("membership", "Membership verdict for a line AB");
  std::string mem_z, mem_point;
  mem->add_option("--z", mem_z, "Z file")->required();
  mem->add_option("--point", mem_point, "Line file: {\"rows\": 2x4} or {\"pluecker\": [6]}")->required();

  // sample
  auto* smp = app.add_subcommand("sample", "Sample a witness cell of Gr(2,n)>=0");
  std::string smp_tag, smp_params, smp_z;
  std::vector<int> smp_idx;
  int smp_j = 0, smp_n = 0;
  smp->add_option("--tag", smp_tag, "interior, facet, plane-I, plane-II, quadric-III, line-I, line-II")->required();
  smp->add_option("--i", smp_idx, "Cell index; quadric-III and line-II take a second one");
  smp->add_option("--j", smp_j, "Second cell index");
  smp->add_option("--params", smp_params, "Comma-separated positive rationals")->required();
  smp->add_option("--n", smp_n, "Number of points (taken from --z if given)");
  smp->add_option("--z", smp_z, "Z file; adds the image line and its verdict");

  // strata
  auto* str = app.add_subcommand("strata", "Boundary stratification report");
  std::string str_z, str_out;
  bool str_vertices = false;
  str->add_option("--z", str_z, "Z file")->required();
  str->add_option("--report", str_out, "Output file (default stdout)");
  str->add_flag("--vertices", str_vertices, "Include exact vertex points");

  // adjoint
  auto* adj = app.add_subcommand("adjoint", "Solve for the adjoint polynomial");
  std::string adj_z, adj_out;
  adj->add_option("--z", adj_z, "Z file")->required();
  adj->add_option("--out", adj_out, "Output file (default stdout)");

  // verify-canonical
  auto* ver = app.add_subcommand("verify-canonical", "Vertex residues of the canonical form");
  std::string ver_z, ver_adj, ver_out;
  bool ver_facets = false;
  ver->add_option("--z", ver_z, "Z file")->required();
  ver->add_option("--adjoint", ver_adj, "Adjoint file (solved if omitted)");
  ver->add_option("--report", ver_out, "Output file (default stdout)");
  ver->add_flag("--facets", ver_facets, "Also run the facet residue checks");

  // pipeline
  auto* pip = app.add_subcommand("pipeline", "check-z, strata, adjoint, verify-canonical");
  std::string pip_z, pip_dir;
  bool pip_timings = false;
  pip->add_option("--z", pip_z, "Z file")->required();
  pip->add_option("--out-dir", pip_dir, "Output directory")->required();
  pip->add_flag("--timings", pip_timings, "Record stage timings in report.json (breaks byte-identical output)");

  // pentagon-demo
  auto* pen = app.add_subcommand("pentagon-demo", "Canonical form of a convex polygon");
  std::string pen_vertices = "1,0;3,0;4,2;2,4;0,2", pen_out;
  pen->add_option("--vertices", pen_vertices, "x,y;x,y;... in cyclic order")->capture_default_str();
  pen->add_option("--out", pen_out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    apply_jobs(jobs);

    if (*gen) {
      std::vector<Rat> nodes = gen_nodes.empty() ? std::vector<Rat>{} : parse_rat_list(gen_nodes);
      if (nodes.empty())
        for (int i = 1; i <= gen_n; ++i) nodes.emplace_back(i);
      if (static_cast<int>(nodes.size()) != gen_n) throw ValidationError("--nodes must list exactly n values");
      emit(io::z_to(moment_curve_z(nodes)), gen_out);
    } else if (*chk) {
      const ZMatrix z = load_z(chk_path);
      std::cout << io::dump(check_z_json(z));
      z.require_valid();
    } else if (*mem) {
      const ZMatrix z = load_z(mem_z);
      const Pluecker ab = io::line_from(io::load_json(mem_point));
      std::cout << io::dump(io::verdict_to(membership_open(ab, z)));
    } else if (*smp) {
      std::optional<ZMatrix> z;
      if (!smp_z.empty()) z = load_z(smp_z);
      const int n = z ? z->n() : smp_n;
      if (z && smp_n != 0 && smp_n != n) throw ValidationError("--n differs from the size of Z");
      const CellTag tag = parse_cell_tag(smp_tag);
      if (smp_j != 0) smp_idx.push_back(smp_j);
      const auto s = cell_sample(tag, smp_idx, parse_rat_list(smp_params), n);
      json j{{"tag", to_string(s.tag)}, {"n", n}, {"indices", s.indices}, {"params", io::rats_to(s.params)},
             {"x", io::matrix_to(s.x)}};
      if (z) {
        const Pluecker ab = amplituhedron_map(s.x, *z);
        j["pluecker"] = io::rats_to(ab.coords());
        j["verdict"] = io::verdict_to(membership_open(ab, *z));
      }
      std::cout << io::dump(j);
    } else if (*str) {
      const ZMatrix z = load_z(str_z);
      z.require_valid();
      emit(io::strata_report(z, str_vertices), str_out);
    } else if (*adj) {
      const ZMatrix z = load_z(adj_z);
      z.require_valid();
      emit(io::adjoint_to(solve_adjoint(z)), adj_out);
    } else if (*ver) {
      const ZMatrix z = load_z(ver_z);
      z.require_valid();
      const AdjointPoly a = ver_adj.empty() ? solve_adjoint(z) : io::adjoint_from(io::load_json(ver_adj));
      if (a.basis.degree != static_cast<unsigned>(z.n() - 4)) throw ValidationError("adjoint degree must be n - 4");
      FormAtlas atlas(z, a);
      const Normalization r = normalize(atlas, z);
      json j = io::residues_to(r);
      bool facets_ok = true;
      if (ver_facets) {
        json fc = json::array();
        for (int i = 1; i <= z.n(); ++i) {
          const auto c = facet_residue_check(atlas, i, z);
          facets_ok = facets_ok && c.ok();
          fc.push_back(io::facet_check_to(c));
        }
        j["facet_checks"] = fc;
      }
      emit(j, ver_out);
      if (!r.verified) throw CheckFailed{kClaim, "some vertex residue is not +-1"};
      if (!facets_ok) throw CheckFailed{kClaim, "a facet residue check failed"};
    } else if (*pip) {
      return run_pipeline(pip_z, pip_dir, pip_timings);
    } else if (*pen) {
      const auto verts = parse_vertices(pen_vertices);
      const auto demo = polygon_canonical_demo(verts);
      emit(io::polygon_demo_to(verts, demo), pen_out);
      if (!demo.all_unit) throw CheckFailed{kClaim, "some vertex residue is not +-1"};
    }
  } catch (const CheckFailed& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const ClaimError& e) {
    std::cerr << "claim failed: " << e.what() << "\n";
    return kClaim;
  } catch (const io::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const io::json::exception& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  }
  return kOk;
}
