// gz: command-line front end for the toolkit. JSON in, JSON out, CSV for plot
// emission. Every command is deterministic given --seed (or GZ_SEED).
//
// Exit codes: 0 success, 1 failed invariant or verification, 2 malformed
// input, 3 symmetry violation, 4 unbounded or oversized vertex enumeration.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gz/errors.hpp"
#include "gz/flow.hpp"
#include "gz/inverse.hpp"
#include "gz/json_io.hpp"
#include "gz/orbit.hpp"
#include "gz/pattern.hpp"
#include "gz/polygon.hpp"
#include "gz/polytope.hpp"
#include "gz/rng.hpp"
#include "gz/verify.hpp"

namespace {

using nlohmann::json;

int exit_code_for(gz::ErrorCode c) {
  switch (c) {
    case gz::ErrorCode::BadInput:
    case gz::ErrorCode::ShapeMismatch:
    case gz::ErrorCode::DimMismatch:
    case gz::ErrorCode::UnsupportedPair:
    case gz::ErrorCode::UnsupportedGroup:
    case gz::ErrorCode::InvalidTriangulation:
      return 2;
    case gz::ErrorCode::NonSymmetric:
      return 3;
    case gz::ErrorCode::Unbounded:
    case gz::ErrorCode::DimTooLarge:
      return 4;
    default:
      // Well-formed input whose mathematical precondition failed: interlacing,
      // regularity, degeneracy, or an exhausted sampling budget.
      return 1;
  }
}

double parse_number(const std::string& token) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    gz::fail(gz::ErrorCode::BadInput, "not a number: '" + token + "'");
  }
}

int parse_int(const std::string& token) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    gz::fail(gz::ErrorCode::BadInput, "not an integer: '" + token + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

Eigen::VectorXd parse_csv_vector(const std::string& text) {
  const auto tokens = split(text, ',');
  if (tokens.empty()) gz::fail(gz::ErrorCode::BadInput, "empty number list");
  Eigen::VectorXd v(static_cast<long>(tokens.size()));
  for (std::size_t i = 0; i < tokens.size(); ++i) v[static_cast<long>(i)] = parse_number(tokens[i]);
  return v;
}

gz::Group parse_group(const std::string& tag) {
  if (tag == "u") return gz::Group::Unitary;
  if (tag == "so") return gz::Group::SpecialOrthogonal;
  gz::fail(gz::ErrorCode::BadInput, "group must be 'u' or 'so', got '" + tag + "'");
}

gz::OrbitSpec make_orbit_spec(const std::string& group_tag, const std::string& spectrum_csv,
                              int n_flag) {
  gz::OrbitSpec spec;
  spec.group = parse_group(group_tag);
  spec.spectrum.values = parse_csv_vector(spectrum_csv);
  const int len = static_cast<int>(spec.spectrum.values.size());
  spec.n = n_flag > 0 ? n_flag : (spec.group == gz::Group::Unitary ? len : 2 * len);
  gz::validate_orbit_spec(spec);
  return spec;
}

// "1-3,1-4" -> {(1,3),(1,4)}; empty -> the fan triangulation.
gz::TriangulationSpec parse_diagonals(const std::string& text, int n) {
  if (text.empty()) return gz::TriangulationSpec::fan(n);
  gz::TriangulationSpec T;
  for (const auto& tok : split(text, ',')) {
    const auto ends = split(tok, '-');
    if (ends.size() != 2)
      gz::fail(gz::ErrorCode::BadInput, "diagonal must look like i-j, got '" + tok + "'");
    T.diagonals.emplace_back(parse_int(ends[0]), parse_int(ends[1]));
  }
  return T;
}

std::string fmt(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

json report_to_json(const gz::RunReport& r) {
  json fails = json::array();
  for (const auto& f : r.failures)
    fails.push_back({{"case_id", f.case_id}, {"discrepancy", f.discrepancy}});
  json maxd = json::object();
  for (const auto& [invariant, d] : r.max_discrepancy) maxd[invariant] = d;
  return {{"suite", r.suite},
          {"cases", r.cases},
          {"failures", std::move(fails)},
          {"max_discrepancy", std::move(maxd)},
          {"wall_time_s", r.wall_time_s}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gz: numerical toolkit for eigenvalue-pattern integrable systems"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  double tolerance_scale = 1.0;
  app.add_option("--seed", seed, "base RNG seed; all sampling derives from it")
      ->envname("GZ_SEED");
  app.add_option("--tolerance-scale", tolerance_scale,
                 "multiplies every default tolerance uniformly");

  int exit_status = 0;

  // ---- map ----------------------------------------------------------------
  auto* map_cmd = app.add_subcommand("map", "pattern of nested leading-block spectra");
  std::string map_in, map_out;
  std::vector<int> map_levels;
  map_cmd->add_option("--in", map_in, "matrix point JSON")->required();
  map_cmd->add_option("--out", map_out, "pattern JSON to write")->required();
  map_cmd->add_option("--levels", map_levels, "restrict to these levels, e.g. 2,4")
      ->delimiter(',');
  map_cmd->callback([&] {
    const auto A = gz::matrix_point_from_json(gz::read_json_file(map_in));
    const gz::Tolerances tol = gz::Tolerances{}.scaled(tolerance_scale);
    gz::GZPattern p;
    if (map_levels.empty()) {
      p = gz::gz_map(A, tol);
    } else {
      p = gz::gz_map(A, gz::ChainSpec{A.group, A.n(), map_levels}, tol);
    }
    gz::write_json_file(map_out, gz::to_json(p));
  });

  // ---- polytope -----------------------------------------------------------
  auto* poly_cmd = app.add_subcommand("polytope", "inequality systems and their vertices");
  std::string pt_group = "u", pt_spectrum, pt_fixture, pt_out, pt_vertices_out;
  int pt_n = 0, pt_free_chain = 0;
  double pt_a = 1.0, pt_b = 2.0, pt_k = 1.0;
  std::vector<std::string> pt_cuts;
  poly_cmd->add_option("--group", pt_group, "u or so");
  poly_cmd->add_option("--spectrum", pt_spectrum, "pinned top row, e.g. 4,2,0");
  poly_cmd->add_option("--n", pt_n, "matrix size when the group is so");
  poly_cmd->add_option("--free-chain", pt_free_chain,
                       "free-top branching system for this matrix size");
  poly_cmd->add_option("--fixture", pt_fixture, "trapezoid | cut-momentum | cut-image")
      ->check(CLI::IsMember({"trapezoid", "cut-momentum", "cut-image"}));
  poly_cmd->add_option("--a", pt_a, "trapezoid lower bound");
  poly_cmd->add_option("--b", pt_b, "trapezoid upper bound");
  poly_cmd->add_option("--k", pt_k, "cut depth for the cut fixtures");
  poly_cmd
      ->add_option("--cut", pt_cuts,
                   "extra halfspace 'a1,...,ad;kappa' (use --cut=\"...\" for a leading minus)")
      ->type_size(1);
  poly_cmd->add_option("--out", pt_out, "inequality system JSON to write")->required();
  poly_cmd->add_option("--vertices", pt_vertices_out, "also write the vertex list here");
  poly_cmd->callback([&] {
    const int sources = (!pt_spectrum.empty() ? 1 : 0) + (pt_free_chain > 0 ? 1 : 0) +
                        (!pt_fixture.empty() ? 1 : 0);
    if (sources != 1)
      gz::fail(gz::ErrorCode::BadInput,
               "pick exactly one of --spectrum, --free-chain, --fixture");
    gz::InequalitySystem S;
    if (!pt_spectrum.empty()) {
      S = gz::image_polytope(make_orbit_spec(pt_group, pt_spectrum, pt_n));
    } else if (pt_free_chain > 0) {
      S = gz::chain_image_system(parse_group(pt_group), pt_free_chain);
    } else if (pt_fixture == "trapezoid") {
      S = gz::su2_trapezoid_system(pt_a, pt_b);
    } else if (pt_fixture == "cut-momentum") {
      S = gz::u2_cut_momentum_set(pt_k);
    } else {
      S = gz::u2_cut_image(pt_k);
    }
    for (const auto& cut_text : pt_cuts) {
      const auto parts = split(cut_text, ';');
      if (parts.size() != 2)
        gz::fail(gz::ErrorCode::BadInput, "cut must look like 'a1,...,ad;kappa'");
      S = gz::cut(S, parse_csv_vector(parts[0]), parse_number(parts[1]));
    }
    gz::write_json_file(pt_out, gz::to_json(S));
    if (!pt_vertices_out.empty()) {
      json verts = json::array();
      for (const auto& v : gz::vertices(S)) {
        json row = json::array();
        for (long i = 0; i < v.size(); ++i) row.push_back(v[i]);
        verts.push_back(std::move(row));
      }
      gz::write_json_file(pt_vertices_out, json{{"vertices", std::move(verts)}});
    }
  });

  // ---- inverse ------------------------------------------------------------
  auto* inv_cmd = app.add_subcommand("inverse", "matrix point reproducing a pattern");
  std::string inv_in, inv_out, inv_phases;
  bool inv_random_phases = false;
  inv_cmd->add_option("--in", inv_in, "pattern JSON")->required();
  inv_cmd->add_option("--out", inv_out, "matrix point JSON to write")->required();
  inv_cmd->add_option("--phases", inv_phases, "phase vector JSON (default: all zero)");
  inv_cmd->add_flag("--random-phases", inv_random_phases, "draw phases from --seed");
  inv_cmd->callback([&] {
    const auto p = gz::pattern_from_json(gz::read_json_file(inv_in));
    const gz::Tolerances tol = gz::Tolerances{}.scaled(tolerance_scale);
    gz::PhaseVector ph = gz::PhaseVector::zero(p.n());
    if (!inv_phases.empty() && inv_random_phases)
      gz::fail(gz::ErrorCode::BadInput, "--phases and --random-phases are exclusive");
    if (!inv_phases.empty()) ph = gz::phases_from_json(gz::read_json_file(inv_phases));
    if (inv_random_phases) ph = gz::PhaseVector::random(p.n(), seed);
    gz::write_json_file(inv_out, gz::to_json(gz::inverse_gz(p, ph, tol)));
  });

  // ---- flow ---------------------------------------------------------------
  auto* flow_cmd = app.add_subcommand("flow", "apply one torus circle flow");
  std::string fl_in, fl_out;
  gz::FlowSpec fl_spec;
  flow_cmd->add_option("--in", fl_in, "matrix point JSON")->required();
  flow_cmd->add_option("--out", fl_out, "matrix point JSON to write")->required();
  flow_cmd->add_option("--level", fl_spec.level, "block size the flow acts through")->required();
  flow_cmd->add_option("--index", fl_spec.index, "eigenvalue index, descending, 1-based")
      ->required();
  flow_cmd->add_option("--angle", fl_spec.angle, "rotation angle in radians")->required();
  flow_cmd->callback([&] {
    const auto A = gz::matrix_point_from_json(gz::read_json_file(fl_in));
    const gz::Tolerances tol = gz::Tolerances{}.scaled(tolerance_scale);
    gz::write_json_file(fl_out, gz::to_json(gz::gz_flow(A, fl_spec, tol)));
  });

  // ---- sample -------------------------------------------------------------
  auto* sample_cmd = app.add_subcommand("sample", "seeded random orbit / pattern / fibre draws");
  std::string sm_what = "pattern", sm_group = "u", sm_spectrum, sm_in, sm_out;
  int sm_n = 0, sm_count = 1;
  sample_cmd->add_option("--what", sm_what, "orbit | pattern | fibre")
      ->check(CLI::IsMember({"orbit", "pattern", "fibre"}));
  sample_cmd->add_option("--group", sm_group, "u or so");
  sample_cmd->add_option("--spectrum", sm_spectrum, "top row for orbit/pattern draws");
  sample_cmd->add_option("--n", sm_n, "matrix size when the group is so");
  sample_cmd->add_option("--in", sm_in, "pattern JSON (fibre draws)");
  sample_cmd->add_option("--count", sm_count, "number of draws")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--out", sm_out, "JSON array to write")->required();
  sample_cmd->callback([&] {
    json items = json::array();
    if (sm_what == "fibre") {
      if (sm_in.empty()) gz::fail(gz::ErrorCode::BadInput, "fibre draws need --in pattern");
      const auto p = gz::pattern_from_json(gz::read_json_file(sm_in));
      const gz::Tolerances tol = gz::Tolerances{}.scaled(tolerance_scale);
      for (const auto& A : gz::sample_fibre(p, sm_count, seed, tol))
        items.push_back(gz::to_json(A));
    } else {
      if (sm_spectrum.empty()) gz::fail(gz::ErrorCode::BadInput, "need --spectrum");
      const auto spec = make_orbit_spec(sm_group, sm_spectrum, sm_n);
      for (int i = 0; i < sm_count; ++i) {
        const auto stream = gz::derive_seed(seed, static_cast<std::uint64_t>(i));
        if (sm_what == "orbit")
          items.push_back(gz::to_json(gz::sample_orbit(spec, stream)));
        else
          items.push_back(gz::to_json(gz::sample_pattern(spec, stream)));
      }
    }
    gz::write_json_file(sm_out, items);
  });

  // ---- width --------------------------------------------------------------
  auto* width_cmd = app.add_subcommand("width", "lattice width bound of an image polytope");
  std::string wd_spectrum, wd_out;
  double wd_certify = 0.0;
  width_cmd->add_option("--spectrum", wd_spectrum, "top row, e.g. 3,0,-1")->required();
  width_cmd->add_option("--certify", wd_certify,
                        "also search for a simplex certificate of this width");
  width_cmd->add_option("--out", wd_out, "write the certificate JSON here");
  width_cmd->callback([&] {
    const auto values = parse_csv_vector(wd_spectrum);
    std::cout << "width_lower_bound = " << fmt(gz::width_lower_bound(gz::ChamberPoint{values}))
              << "\n";
    if (wd_certify > 0.0) {
      gz::OrbitSpec spec{gz::Group::Unitary, static_cast<int>(values.size()),
                         gz::ChamberPoint{values}};
      const auto S = gz::image_polytope(spec);
      const auto cert = gz::find_axis_simplex(S, wd_certify);
      if (!cert) {
        std::cout << "certificate: none found at width " << fmt(wd_certify) << "\n";
        exit_status = 1;
        return;
      }
      std::ostringstream anchor;
      for (long i = 0; i < cert->anchor.size(); ++i)
        anchor << (i ? "," : "") << fmt(cert->anchor[i]);
      std::cout << "certificate: anchor " << anchor.str() << " width " << fmt(cert->width)
                << "\n";
      if (!wd_out.empty()) gz::write_json_file(wd_out, gz::to_json(*cert));
    }
  });

  // ---- verify -------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
  std::string vf_suite = "all", vf_json;
  gz::VerifyOptions vf_opt;
  verify_cmd->add_option("--suite", vf_suite,
                         "interlacing | roundtrip | flows | convexity | polygon | all")
      ->check(CLI::IsMember({"interlacing", "roundtrip", "flows", "convexity", "polygon", "all"}));
  verify_cmd->add_option("--n", vf_opt.n, "matrix size (<= 8)")->check(CLI::Range(1, 8));
  verify_cmd->add_option("--samples", vf_opt.samples, "cases per suite")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--json", vf_json, "also write the reports as JSON here");
  verify_cmd->callback([&] {
    vf_opt.seed = seed;
    vf_opt.tolerance_scale = tolerance_scale;
    std::vector<gz::RunReport> reports;
    if (vf_suite == "all") {
      reports = gz::run_all_suites(vf_opt);
    } else if (vf_suite == "interlacing") {
      reports.push_back(gz::run_interlacing_suite(vf_opt));
    } else if (vf_suite == "roundtrip") {
      reports.push_back(gz::run_roundtrip_suite(vf_opt));
    } else if (vf_suite == "flows") {
      reports.push_back(gz::run_flows_suite(vf_opt));
    } else if (vf_suite == "convexity") {
      reports.push_back(gz::run_convexity_suite(vf_opt));
    } else {
      reports.push_back(gz::run_polygon_suite(vf_opt));
    }
    json all = json::array();
    for (const auto& rep : reports) {
      std::cout << rep.human_text();
      all.push_back(report_to_json(rep));
      if (!rep.ok()) exit_status = 1;
    }
    if (!vf_json.empty()) gz::write_json_file(vf_json, all);
  });

  // ---- plot-data ----------------------------------------------------------
  auto* plot_cmd = app.add_subcommand(
      "plot-data",
      "CSV for figures. polytope: rows 'vertex,i,,x,y,z' then 'edge,p,q,,,' (dim <= 3, "
      "missing coordinates left empty). pattern-cloud: one row per sample, one column per "
      "coordinate below the top row. polygon: rows 'x,y,z', one per vertex.");
  std::string pd_what, pd_in, pd_out;
  long pd_samples = 100;
  plot_cmd->add_option("--what", pd_what, "polytope | pattern-cloud | polygon")
      ->required()
      ->check(CLI::IsMember({"polytope", "pattern-cloud", "polygon"}));
  plot_cmd->add_option("--in", pd_in, "input JSON (system, orbit spec, or polygon)")->required();
  plot_cmd->add_option("--out", pd_out, "CSV to write")->required();
  plot_cmd->add_option("--samples", pd_samples, "pattern-cloud sample count")
      ->check(CLI::PositiveNumber);
  plot_cmd->callback([&] {
    std::ostringstream csv;
    csv << std::setprecision(17);
    if (pd_what == "polytope") {
      const auto S = gz::system_from_json(gz::read_json_file(pd_in));
      if (S.dim > 3)
        gz::fail(gz::ErrorCode::BadInput,
                 "plot emission handles dim <= 3, system has dim " + std::to_string(S.dim));
      const auto verts = gz::vertices(S);
      for (std::size_t i = 0; i < verts.size(); ++i) {
        csv << "vertex," << i << ",";
        for (long c = 0; c < 3; ++c)
          csv << "," << (c < verts[i].size() ? fmt(verts[i][c]) : "");
        csv << "\n";
      }
      for (const auto& [p, q] : gz::polytope_edges(S, verts))
        csv << "edge," << p << "," << q << ",,,\n";
    } else if (pd_what == "pattern-cloud") {
      const auto spec = gz::orbit_spec_from_json(gz::read_json_file(pd_in));
      for (long i = 0; i < pd_samples; ++i) {
        const auto p = gz::sample_pattern(spec, gz::derive_seed(seed, i));
        const auto x = gz::below_top_coordinates(p);
        for (long c = 0; c < x.size(); ++c) csv << (c ? "," : "") << fmt(x[c]);
        csv << "\n";
      }
    } else {
      const auto P = gz::polygon_from_json(gz::read_json_file(pd_in));
      Eigen::Vector3d v = Eigen::Vector3d::Zero();
      for (int k = 0; k < P.n(); ++k) {
        csv << fmt(v.x()) << "," << fmt(v.y()) << "," << fmt(v.z()) << "\n";
        v += P.edges[k];
      }
    }
    gz::write_text_file(pd_out, csv.str());
  });

  // ---- polygon ------------------------------------------------------------
  auto* pg_cmd = app.add_subcommand("polygon", "bending systems on polygon moduli");
  pg_cmd->require_subcommand(1);

  auto* pg_sample = pg_cmd->add_subcommand("sample", "seeded random closed polygon");
  std::string pgs_lengths, pgs_diagonals, pgs_out;
  pg_sample->add_option("--lengths", pgs_lengths, "edge lengths, e.g. 1,1,1,1,1")->required();
  pg_sample->add_option("--diagonals", pgs_diagonals, "triangulation 'i-j,...' (default fan)");
  pg_sample->add_option("--out", pgs_out, "polygon JSON to write")->required();
  pg_sample->callback([&] {
    const auto lengths = parse_csv_vector(pgs_lengths);
    const auto T = parse_diagonals(pgs_diagonals, static_cast<int>(lengths.size()));
    gz::write_json_file(pgs_out, gz::to_json(gz::sample_polygon(lengths, T, seed)));
  });

  auto* pg_bend = pg_cmd->add_subcommand("bend", "rotate an edge run about its chord");
  std::string pgb_in, pgb_out;
  std::vector<int> pgb_diagonal;
  double pgb_angle = 0.0;
  pg_bend->add_option("--in", pgb_in, "polygon JSON")->required();
  pg_bend->add_option("--diagonal", pgb_diagonal, "run endpoints i,j")
      ->delimiter(',')
      ->expected(2)
      ->required();
  pg_bend->add_option("--angle", pgb_angle, "rotation angle in radians")->required();
  pg_bend->add_option("--out", pgb_out, "polygon JSON to write")->required();
  pg_bend->callback([&] {
    const auto P = gz::polygon_from_json(gz::read_json_file(pgb_in));
    const auto Q = gz::bend(P, {pgb_diagonal[0], pgb_diagonal[1]}, pgb_angle);
    gz::write_json_file(pgb_out, gz::to_json(Q));
  });

  auto* pg_poly = pg_cmd->add_subcommand("polytope", "triangle-inequality system");
  std::string pgp_lengths, pgp_diagonals, pgp_out;
  pg_poly->add_option("--lengths", pgp_lengths, "edge lengths")->required();
  pg_poly->add_option("--diagonals", pgp_diagonals, "triangulation 'i-j,...' (default fan)");
  pg_poly->add_option("--out", pgp_out, "inequality system JSON to write")->required();
  pg_poly->callback([&] {
    const auto lengths = parse_csv_vector(pgp_lengths);
    const auto T = parse_diagonals(pgp_diagonals, static_cast<int>(lengths.size()));
    gz::write_json_file(pgp_out, gz::to_json(gz::polygon_polytope(lengths, T)));
  });

  auto* pg_len = pg_cmd->add_subcommand("lengths", "diagonal lengths of a polygon");
  std::string pgl_in, pgl_diagonals, pgl_out;
  pg_len->add_option("--in", pgl_in, "polygon JSON")->required();
  pg_len->add_option("--diagonals", pgl_diagonals, "triangulation 'i-j,...' (default fan)");
  pg_len->add_option("--out", pgl_out, "also write {\"values\": [...]} here");
  pg_len->callback([&] {
    const auto P = gz::polygon_from_json(gz::read_json_file(pgl_in));
    const auto T = parse_diagonals(pgl_diagonals, P.n());
    const auto values = gz::diagonal_lengths(P, T);
    for (long i = 0; i < values.size(); ++i) std::cout << (i ? "," : "") << fmt(values[i]);
    std::cout << "\n";
    if (!pgl_out.empty()) gz::write_json_file(pgl_out, gz::to_json(gz::ChamberPoint{values}));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const gz::Error& err) {
    std::cerr << "error[" << gz::error_tag(err.code) << "]: " << err.what() << "\n";
    return exit_code_for(err.code);
  } catch (const std::exception& err) {
    std::cerr << "error[UNKNOWN]: " << err.what() << "\n";
    return 1;
  }
  return exit_status;
}
