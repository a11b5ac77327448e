#include "gz/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "gz/flow.hpp"
#include "gz/inverse.hpp"
#include "gz/orbit.hpp"
#include "gz/pattern.hpp"
#include "gz/polygon.hpp"
#include "gz/polytope.hpp"
#include "gz/rng.hpp"

namespace gz {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string case_tag(const char* what, int n, long i) {
  std::ostringstream out;
  out << what << " n=" << n << " sample=" << i;
  return out.str();
}

// Strictly decreasing spectrum with a comfortable minimum gap so that the
// reconstruction stays well conditioned across the whole suite.
Eigen::VectorXd strict_spectrum(int n, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = rng.uniform(-3.0, 3.0);
    std::sort(v.data(), v.data() + n, std::greater<double>());
    double gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < n; ++i) gap = std::min(gap, v[i] - v[i + 1]);
    if (n == 1 || gap >= 0.2) return v;
  }
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = static_cast<double>(n - i);
  return v;
}

double pattern_distance(const GZPattern& a, const GZPattern& b) {
  double d = 0.0;
  for (std::size_t t = 0; t < a.rows.size(); ++t)
    d = std::max(d, (a.rows[t] - b.rows[t]).cwiseAbs().maxCoeff());
  return d;
}

// Worst signed violation of the closed consecutive-level inequalities,
// evaluated through the polytope row builder as a second opinion next to
// check_interlacing. Negative values mean strict satisfaction.
double interlacing_excess(const GZPattern& p) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t + 1 < p.rows.size(); ++t) {
    const auto S = branching_inequalities(p.group, p.levels[t]);
    Eigen::VectorXd x(S.dim);
    x << p.rows[t], p.rows[t + 1];
    for (const auto& row : S.rows) worst = std::max(worst, row.a.dot(x) - row.kappa);
  }
  return worst;
}

double membership_excess(const InequalitySystem& S, const Eigen::VectorXd& x) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& row : S.rows) worst = std::max(worst, row.a.dot(x) - row.kappa);
  const double unit = 1.0 + (x.size() ? x.cwiseAbs().maxCoeff() : 0.0);
  return worst / unit;
}

}  // namespace

void RunReport::note(const std::string& invariant, double d) {
  auto& slot = max_discrepancy[invariant];
  slot = std::max(slot, d);
}

void RunReport::expect(bool pass, const std::string& case_id, double discrepancy) {
  ++cases;
  if (!pass) failures.push_back({case_id, discrepancy});
}

std::string RunReport::human_text() const {
  std::ostringstream out;
  out << "suite " << suite << ": " << cases << " cases, " << failures.size() << " failures ("
      << std::fixed << std::setprecision(2) << wall_time_s << " s)\n";
  out << std::scientific << std::setprecision(3);
  for (const auto& [invariant, d] : max_discrepancy)
    out << "  max " << invariant << " = " << d << "\n";
  const std::size_t shown = std::min<std::size_t>(failures.size(), 8);
  for (std::size_t i = 0; i < shown; ++i)
    out << "  FAIL " << failures[i].case_id << " (discrepancy " << failures[i].discrepancy
        << ")\n";
  if (failures.size() > shown)
    out << "  ... and " << failures.size() - shown << " more failures\n";
  return out.str();
}

RunReport run_interlacing_suite(const VerifyOptions& opt) {
  const Stopwatch clock;
  RunReport rep;
  rep.suite = "interlacing";
  const Tolerances tol = Tolerances{}.scaled(opt.tolerance_scale);
  for (long i = 0; i < opt.samples; ++i) {
    const auto A = random_matrix_point(Group::Unitary, opt.n, derive_seed(opt.seed, i));
    const auto p = gz_map(A);
    const double excess = std::max(0.0, interlacing_excess(p)) / p.scale();
    rep.note("interlacing_excess", excess);
    rep.expect(check_interlacing(p, tol.interlacing_slack), case_tag("interlacing", opt.n, i),
               excess);
  }
  rep.wall_time_s = clock.seconds();
  return rep;
}

RunReport run_roundtrip_suite(const VerifyOptions& opt) {
  const Stopwatch clock;
  RunReport rep;
  rep.suite = "roundtrip";
  const Tolerances tol = Tolerances{}.scaled(opt.tolerance_scale);
  for (long i = 0; i < opt.samples; ++i) {
    Rng rng(derive_seed(opt.seed, i));
    OrbitSpec spec{Group::Unitary, opt.n, ChamberPoint{strict_spectrum(opt.n, rng)}};
    const auto p = sample_pattern(spec, rng.next_u64());
    const auto phases = PhaseVector::random(opt.n, rng.next_u64());

    const auto A = inverse_gz(p, phases, tol);
    const double gap = pattern_distance(gz_map(A), p) / p.scale();
    rep.note("roundtrip_gap", gap);
    rep.expect(gap <= 1e-7 * opt.tolerance_scale, case_tag("roundtrip", opt.n, i), gap);

    const auto S = image_polytope(spec);
    const double excess = std::max(0.0, membership_excess(S, below_top_coordinates(p)));
    rep.note("membership_excess", excess);
    rep.expect(excess <= tol.membership_slack, case_tag("membership", opt.n, i), excess);
  }
  rep.wall_time_s = clock.seconds();
  return rep;
}

RunReport run_flows_suite(const VerifyOptions& opt) {
  const Stopwatch clock;
  RunReport rep;
  rep.suite = "flows";
  const Tolerances tol = Tolerances{}.scaled(opt.tolerance_scale);

  Eigen::VectorXd lambda(opt.n);
  for (int i = 0; i < opt.n; ++i) lambda[i] = static_cast<double>(opt.n - i);
  const OrbitSpec spec{Group::Unitary, opt.n, ChamberPoint{lambda}};

  for (long i = 0; i < opt.samples; ++i) {
    // Redraw until the sample is regular enough to stay clear of the flow's
    // own degeneracy gate; the strict integer spectrum makes this rare.
    MatrixPoint A = sample_orbit(spec, derive_seed(opt.seed, 0x10000 + 64 * i));
    GZPattern p = gz_map(A);
    for (int attempt = 1; attempt < 32 && !is_regular(p, 10.0 * tol.flow_gap * p.scale());
         ++attempt) {
      A = sample_orbit(spec, derive_seed(opt.seed, 0x10000 + 64 * i + attempt));
      p = gz_map(A);
    }
    Rng rng(derive_seed(opt.seed, 0x20000000 + i));

    for (int level = 1; level < opt.n; ++level) {
      for (int index = 1; index <= level; ++index) {
        std::ostringstream dir;
        dir << "level=" << level << " index=" << index << " sample=" << i;

        const FlowSpec full{level, index, kTwoPi};
        const double periodic =
            (gz_flow(A, full, tol).entries - A.entries).cwiseAbs().maxCoeff() / A.scale();
        rep.note("flow_periodicity", periodic);
        rep.expect(periodic <= 1e-9 * opt.tolerance_scale, "periodicity " + dir.str(), periodic);

        const FlowSpec f{level, index, rng.uniform(0.3, 5.9)};
        const double moved = pattern_distance(gz_map(gz_flow(A, f, tol)), p) / p.scale();
        rep.note("pattern_invariance", moved);
        rep.expect(moved <= 1e-8 * opt.tolerance_scale, "pattern " + dir.str(), moved);

        const int level2 = 1 + static_cast<int>(rng.next_u64() % (opt.n - 1));
        const int index2 = 1 + static_cast<int>(rng.next_u64() % level2);
        const FlowSpec g{level2, index2, rng.uniform(0.3, 5.9)};
        const double comm = verify_commutation(A, f, g, tol) / A.scale();
        rep.note("flow_commutation", comm);
        rep.expect(comm <= 1e-6 * opt.tolerance_scale, "commutation " + dir.str(), comm);
      }
    }
  }
  rep.wall_time_s = clock.seconds();
  return rep;
}

RunReport run_convexity_suite(const VerifyOptions& opt) {
  const Stopwatch clock;
  RunReport rep;
  rep.suite = "convexity";
  const Tolerances tol = Tolerances{}.scaled(opt.tolerance_scale);

  Rng spectrum_rng(derive_seed(opt.seed, 0xC0));
  const OrbitSpec spec{Group::Unitary, opt.n, ChamberPoint{strict_spectrum(opt.n, spectrum_rng)}};
  const auto S = image_polytope(spec);

  for (long i = 0; i < opt.samples; ++i) {
    const auto p1 = sample_pattern(spec, derive_seed(opt.seed, 2 * i));
    const auto p2 = sample_pattern(spec, derive_seed(opt.seed, 2 * i + 1));
    const Eigen::VectorXd mid =
        0.5 * (below_top_coordinates(p1) + below_top_coordinates(p2));

    const double excess = std::max(0.0, membership_excess(S, mid));
    rep.note("midpoint_excess", excess);
    rep.expect(excess <= tol.membership_slack, case_tag("midpoint member", opt.n, i), excess);

    const auto q = pattern_from_coordinates(spec, mid);
    const double gap = pattern_distance(gz_map(inverse_gz(q, tol)), q) / q.scale();
    rep.note("midpoint_attainment_gap", gap);
    rep.expect(gap <= 1e-7 * opt.tolerance_scale, case_tag("midpoint attained", opt.n, i), gap);
  }
  rep.wall_time_s = clock.seconds();
  return rep;
}

RunReport run_polygon_suite(const VerifyOptions& opt) {
  const Stopwatch clock;
  RunReport rep;
  rep.suite = "polygon";
  const Tolerances tol = Tolerances{}.scaled(opt.tolerance_scale);

  const int m = std::max(opt.n, 4);
  const Eigen::VectorXd lengths = Eigen::VectorXd::Ones(m);
  const auto T = TriangulationSpec::fan(m);
  const auto S = polygon_polytope(lengths, T);
  const double unit = 1.0 + lengths.maxCoeff();
  const int diag_count = static_cast<int>(T.diagonals.size());

  for (long i = 0; i < opt.samples; ++i) {
    const auto P = sample_polygon(lengths, T, derive_seed(opt.seed, i));
    Rng rng(derive_seed(opt.seed, 0x40000000 + i));

    const double excess = std::max(0.0, membership_excess(S, diagonal_lengths(P, T)));
    rep.note("moduli_membership_excess", excess);
    rep.expect(excess <= tol.membership_slack, case_tag("moduli member", m, i), excess);

    const auto d1 = T.diagonals[i % diag_count];
    const auto Q = bend(P, d1, rng.uniform(0.3, 5.9));

    Eigen::Vector3d closure = Eigen::Vector3d::Zero();
    double length_defect = 0.0;
    for (int k = 0; k < m; ++k) {
      closure += Q.edges[k];
      length_defect = std::max(length_defect, std::abs(Q.edges[k].norm() - lengths[k]));
    }
    const double closure_defect = closure.cwiseAbs().maxCoeff() / unit;
    rep.note("bend_closure_defect", closure_defect);
    rep.expect(closure_defect <= 1e-12 * opt.tolerance_scale, case_tag("bend closure", m, i),
               closure_defect);
    rep.note("bend_length_defect", length_defect / unit);
    rep.expect(length_defect / unit <= 1e-12 * opt.tolerance_scale,
               case_tag("bend lengths", m, i), length_defect / unit);

    const double diag_defect =
        (diagonal_lengths(Q, T) - diagonal_lengths(P, T)).cwiseAbs().maxCoeff() / unit;
    rep.note("bend_diagonal_defect", diag_defect);
    rep.expect(diag_defect <= 1e-10 * opt.tolerance_scale, case_tag("bend diagonals", m, i),
               diag_defect);

    const auto d2 = T.diagonals[(i + 1) % diag_count];
    const double a1 = rng.uniform(0.3, 5.9);
    const double a2 = rng.uniform(0.3, 5.9);
    const auto AB = bend(bend(P, d1, a1), d2, a2);
    const auto BA = bend(bend(P, d2, a2), d1, a1);
    double comm = 0.0;
    for (int k = 0; k < m; ++k)
      comm = std::max(comm, (AB.edges[k] - BA.edges[k]).cwiseAbs().maxCoeff());
    comm /= unit;
    rep.note("bend_commutation", comm);
    rep.expect(comm <= 1e-8 * opt.tolerance_scale, case_tag("bend commutation", m, i), comm);
  }
  rep.wall_time_s = clock.seconds();
  return rep;
}

std::vector<RunReport> run_all_suites(const VerifyOptions& opt) {
  return {run_interlacing_suite(opt), run_roundtrip_suite(opt), run_flows_suite(opt),
          run_convexity_suite(opt), run_polygon_suite(opt)};
}

}  // namespace gz
