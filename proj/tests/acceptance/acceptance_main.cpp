// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Tolerances and budgets are pinned here on purpose; do not widen them to
// make a run pass.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "gz/errors.hpp"
#include "gz/flow.hpp"
#include "gz/inverse.hpp"
#include "gz/json_io.hpp"
#include "gz/orbit.hpp"
#include "gz/pattern.hpp"
#include "gz/polygon.hpp"
#include "gz/polytope.hpp"
#include "gz/rng.hpp"

namespace {

using namespace gz;

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Pinned acceptance tolerances (relative to scale unless stated otherwise).
constexpr double kInterlacingSlack = 1e-10;
constexpr double kImageMembershipSlack = 1e-8;
constexpr double kRoundTripGap = 1e-7;
constexpr double kCommutationGap = 1e-6;
constexpr double kPatternInvarianceGap = 1e-8;
constexpr double kPeriodicityGap = 1e-9;
constexpr double kConnectTarget = 1e-4;
constexpr double kWidthRelativeError = 1e-12;  // exact up to arithmetic
constexpr double kBendExactness = 1e-12;       // absolute, unit edge lengths
constexpr double kDiagonalDrift = 1e-10;
constexpr double kBendCommutation = 1e-8;
constexpr double kVertexCoverage = 0.05;  // max-norm

// Pinned budgets in seconds.
constexpr double kBudgetInterlacing = 10.0;
constexpr double kBudgetImage = 30.0;
constexpr double kBudgetFlows = 30.0;
constexpr double kBudgetPolygon = 30.0;

constexpr std::uint64_t kSeed = 2026;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

void print_line(int number, const std::string& name, const Outcome& out) {
  std::cout << "criterion " << number << " " << name << ": " << (out.pass ? "PASS" : "FAIL");
  if (!out.detail.empty()) std::cout << " (" << out.detail << ")";
  std::cout << std::endl;
}

std::string fmt(double v) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(2) << v;
  return out.str();
}

std::string fmt_fixed(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << v;
  return out.str();
}

double pattern_distance(const GZPattern& a, const GZPattern& b) {
  double d = 0.0;
  for (std::size_t t = 0; t < a.rows.size(); ++t)
    d = std::max(d, (a.rows[t] - b.rows[t]).cwiseAbs().maxCoeff());
  return d;
}

Eigen::VectorXd strict_spectrum(int n, Rng& rng) {
  for (;;) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = rng.uniform(-3.0, 3.0);
    std::sort(v.data(), v.data() + n, std::greater<double>());
    bool ok = true;
    for (int i = 0; i + 1 < n; ++i) ok = ok && (v[i] - v[i + 1] >= 0.2);
    if (ok) return v;
  }
}

// ---- criterion 1: nested-spectra interlacing ------------------------------

Outcome criterion_interlacing() {
  const Stopwatch clock;
  long failures = 0;
  long cases = 0;
  for (int n = 2; n <= 8; ++n) {
    for (long i = 0; i < 1000; ++i) {
      const auto A = random_matrix_point(Group::Unitary, n,
                                         derive_seed(kSeed, 1000 * n + i));
      if (!check_interlacing(gz_map(A), kInterlacingSlack)) ++failures;
      ++cases;
    }
  }
  const double t = clock.seconds();
  Outcome out;
  out.pass = failures == 0 && t < kBudgetInterlacing;
  out.detail = std::to_string(cases) + " samples, " + std::to_string(failures) +
               " failures, " + fmt_fixed(t) + " s";
  return out;
}

// ---- criteria 2 and 3: image = polytope, and convexity ---------------------

std::vector<OrbitSpec> image_test_spectra() {
  std::vector<OrbitSpec> specs;
  Eigen::VectorXd pinned(3);
  pinned << 4.0, 2.0, 0.0;
  specs.push_back({Group::Unitary, 3, ChamberPoint{pinned}});
  Rng rng(derive_seed(kSeed, 0xA));
  for (int n = 3; n <= 5; ++n)
    specs.push_back({Group::Unitary, n, ChamberPoint{strict_spectrum(n, rng)}});
  return specs;
}

Outcome criterion_image_polytope() {
  const Stopwatch clock;
  long member_failures = 0, attain_failures = 0;
  double worst_gap = 0.0;
  for (const auto& spec : image_test_spectra()) {
    const auto S = image_polytope(spec);
    for (long i = 0; i < 1000; ++i) {
      const auto A = sample_orbit(spec, derive_seed(kSeed, 17 + 2 * i));
      const auto x = below_top_coordinates(gz_map(A));
      if (!membership(S, x, kImageMembershipSlack)) ++member_failures;
    }
    for (long i = 0; i < 200; ++i) {
      const auto p = sample_pattern(spec, derive_seed(kSeed, 31 + 2 * i));
      if (!membership(S, below_top_coordinates(p), kImageMembershipSlack)) {
        ++member_failures;
        continue;
      }
      const auto phases = PhaseVector::random(spec.n, derive_seed(kSeed, 53 + i));
      const auto back = gz_map(inverse_gz(p, phases));
      const double gap = pattern_distance(back, p) / p.scale();
      worst_gap = std::max(worst_gap, gap);
      if (gap > kRoundTripGap) ++attain_failures;
    }
  }
  const double t = clock.seconds();
  Outcome out;
  out.pass = member_failures == 0 && attain_failures == 0 && t < kBudgetImage;
  out.detail = "4 spectra, " + std::to_string(member_failures) + " membership / " +
               std::to_string(attain_failures) + " attainment failures, worst gap " +
               fmt(worst_gap) + ", " + fmt_fixed(t) + " s";
  return out;
}

Outcome criterion_convexity() {
  long failures = 0;
  double worst_gap = 0.0;
  const auto specs = image_test_spectra();
  for (std::size_t s = 0; s < specs.size(); ++s) {
    const auto& spec = specs[s];
    const auto S = image_polytope(spec);
    for (long i = 0; i < 125; ++i) {
      const auto A1 = sample_orbit(spec, derive_seed(kSeed, 101 + 4 * i));
      const auto A2 = sample_orbit(spec, derive_seed(kSeed, 103 + 4 * i));
      const Eigen::VectorXd mid = 0.5 * (below_top_coordinates(gz_map(A1)) +
                                         below_top_coordinates(gz_map(A2)));
      if (!membership(S, mid, kImageMembershipSlack)) {
        ++failures;
        continue;
      }
      const auto q = pattern_from_coordinates(spec, mid);
      const double gap = pattern_distance(gz_map(inverse_gz(q)), q) / q.scale();
      worst_gap = std::max(worst_gap, gap);
      if (gap > kRoundTripGap) ++failures;
    }
  }
  Outcome out;
  out.pass = failures == 0;
  out.detail = "500 midpoints, " + std::to_string(failures) + " failures, worst gap " +
               fmt(worst_gap);
  return out;
}

// ---- criterion 4: flow commutation and invariants --------------------------

Outcome criterion_flows() {
  const Stopwatch clock;
  long failures = 0;
  double worst_comm = 0.0, worst_inv = 0.0, worst_per = 0.0;
  const Tolerances tol;
  for (int n = 3; n <= 5; ++n) {
    Eigen::VectorXd lambda(n);
    for (int i = 0; i < n; ++i) lambda[i] = static_cast<double>(n - i);
    const OrbitSpec spec{Group::Unitary, n, ChamberPoint{lambda}};

    std::vector<FlowSpec> directions;
    for (int level = 1; level <= n; ++level)
      for (int index = 1; index <= level; ++index) directions.push_back({level, index, 0.0});

    for (long s = 0; s < 50; ++s) {
      MatrixPoint A = sample_orbit(spec, derive_seed(kSeed, 0x4000 + 64 * (50 * n + s)));
      GZPattern p = gz_map(A);
      for (int attempt = 1; attempt < 32 && !is_regular(p, 10.0 * tol.flow_gap * p.scale());
           ++attempt) {
        A = sample_orbit(spec, derive_seed(kSeed, 0x4000 + 64 * (50 * n + s) + attempt));
        p = gz_map(A);
      }
      Rng rng(derive_seed(kSeed, 0x8000 + 50 * n + s));
      const double scale = A.scale();

      for (auto f : directions) {
        f.angle = kTwoPi;
        const double per = (gz_flow(A, f).entries - A.entries).cwiseAbs().maxCoeff() / scale;
        worst_per = std::max(worst_per, per);
        if (per > kPeriodicityGap) ++failures;

        f.angle = rng.uniform(0.3, 5.9);
        const double inv = pattern_distance(gz_map(gz_flow(A, f)), p) / p.scale();
        worst_inv = std::max(worst_inv, inv);
        if (inv > kPatternInvarianceGap) ++failures;
      }
      for (std::size_t a = 0; a < directions.size(); ++a) {
        for (std::size_t b = a + 1; b < directions.size(); ++b) {
          FlowSpec f = directions[a], g = directions[b];
          f.angle = rng.uniform(0.3, 5.9);
          g.angle = rng.uniform(0.3, 5.9);
          const double comm = verify_commutation(A, f, g) / scale;
          worst_comm = std::max(worst_comm, comm);
          if (comm > kCommutationGap) ++failures;
        }
      }
    }
  }
  const double t = clock.seconds();
  Outcome out;
  out.pass = failures == 0 && t < kBudgetFlows;
  out.detail = std::to_string(failures) + " failures, worst commutation " + fmt(worst_comm) +
               ", invariance " + fmt(worst_inv) + ", periodicity " + fmt(worst_per) + ", " +
               fmt_fixed(t) + " s";
  return out;
}

// ---- criterion 5: fibre connectivity by composite flows --------------------

Outcome criterion_fibre_connectivity() {
  Eigen::VectorXd lambda(3);
  lambda << 3.0, 2.0, 0.0;
  const OrbitSpec spec{Group::Unitary, 3, ChamberPoint{lambda}};
  const Tolerances tol;

  int successes = 0;
  int bad_failures = 0;  // failures that are NOT search-budget exhaustion
  for (int c = 0; c < 10; ++c) {
    GZPattern p = sample_pattern(spec, derive_seed(kSeed, 0xF00 + 8 * c));
    for (int attempt = 1; attempt < 16 && !is_regular(p, tol.regularity_gap * p.scale());
         ++attempt)
      p = sample_pattern(spec, derive_seed(kSeed, 0xF00 + 8 * c + attempt));

    const auto fibre = sample_fibre(p, 2, derive_seed(kSeed, 0x1F00 + c));
    const auto& A = fibre[0];
    const auto& B = fibre[1];
    const double target = kConnectTarget * A.scale();
    const auto res = connect_by_flows(A, B, target, 14, 200);
    if (res.found) {
      ++successes;
      continue;
    }
    // Only a search-budget miss is tolerated: both endpoints must still be
    // genuine members of the fibre.
    const double da = pattern_distance(gz_map(A), p) / p.scale();
    const double db = pattern_distance(gz_map(B), p) / p.scale();
    if (da > kRoundTripGap || db > kRoundTripGap) ++bad_failures;
  }
  Outcome out;
  out.pass = successes >= 9 && bad_failures == 0;
  out.detail = std::to_string(successes) + "/10 connected, " + std::to_string(bad_failures) +
               " non-budget failures";
  return out;
}

// ---- criterion 6: fixture inequality sets through the CLI ------------------

int run_command(const std::string& command) {
  const int status = std::system(command.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

// Rows scaled by their largest |coefficient| (positive factor, so the
// halfspace is unchanged), then sorted; equality must be exact because the
// fixtures are integer-valued.
std::vector<std::vector<double>> normalized_rows(const InequalitySystem& S) {
  std::vector<std::vector<double>> rows;
  for (const auto& r : S.rows) {
    const double s = r.a.cwiseAbs().maxCoeff();
    std::vector<double> row;
    for (long i = 0; i < r.a.size(); ++i) row.push_back(r.a[i] / s);
    row.push_back(r.kappa / s);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

InequalitySystem expected_system(int dim, const std::vector<std::pair<std::vector<double>, double>>& rows) {
  InequalitySystem S;
  S.dim = dim;
  for (const auto& [a, kappa] : rows) {
    Halfspace h;
    h.a = Eigen::Map<const Eigen::VectorXd>(a.data(), static_cast<long>(a.size()));
    h.kappa = kappa;
    S.rows.push_back(h);
  }
  return S;
}

Outcome criterion_fixtures() {
  const std::string gz_path = GZ_CLI_PATH;
  char tmpl[] = "/tmp/gz_acceptance_XXXXXX";
  const char* dir = mkdtemp(tmpl);
  Outcome out;
  if (!dir) {
    out.detail = "could not create scratch directory";
    return out;
  }
  const std::string scratch(dir);

  struct Fixture {
    std::string flags;
    InequalitySystem expected;
  };
  // trapezoid a=1, b=2: y <= 2, -y <= -1, x - y <= 0, -x - y <= 0
  // cut momentum set k=1: -x1 <= 0, x2 <= 0, -x2 <= 1
  // cut image k=1: x0-x1 <= 0, x2-x0 <= 0, -x1 <= 0, x2 <= 0, -x2 <= 1
  const std::vector<Fixture> fixtures = {
      {"--fixture trapezoid --a 1 --b 2",
       expected_system(2, {{{0, 1}, 2}, {{0, -1}, -1}, {{1, -1}, 0}, {{-1, -1}, 0}})},
      {"--fixture cut-momentum --k 1",
       expected_system(2, {{{-1, 0}, 0}, {{0, 1}, 0}, {{0, -1}, 1}})},
      {"--fixture cut-image --k 1",
       expected_system(3, {{{1, -1, 0}, 0},
                           {{-1, 0, 1}, 0},
                           {{0, -1, 0}, 0},
                           {{0, 0, 1}, 0},
                           {{0, 0, -1}, 1}})},
  };

  int matched = 0;
  std::string note;
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const std::string file = scratch + "/fixture_" + std::to_string(i) + ".json";
    const int code = run_command(gz_path + " polytope " + fixtures[i].flags + " --out " + file);
    if (code != 0) {
      note += " fixture " + std::to_string(i) + " exit " + std::to_string(code) + ";";
      continue;
    }
    const auto S = system_from_json(read_json_file(file));
    if (S.dim == fixtures[i].expected.dim &&
        normalized_rows(S) == normalized_rows(fixtures[i].expected)) {
      ++matched;
    } else {
      note += " fixture " + std::to_string(i) + " rows differ;";
    }
  }
  out.pass = matched == 3;
  out.detail = std::to_string(matched) + "/3 fixtures exact" + note;
  return out;
}

// ---- criterion 7: width bound and simplex certificate ----------------------

Outcome criterion_width() {
  Rng rng(derive_seed(kSeed, 0x77));
  long failures = 0;
  double worst_rel = 0.0;
  int certified = 0;
  for (int c = 0; c < 20; ++c) {
    const double R = rng.uniform(0.2, 5.0);
    const double k = rng.uniform(0.2, 5.0);
    Eigen::VectorXd values(3);
    values << R, 0.0, -k;
    const double expected = kTwoPi * std::min(R, k);
    const double got = width_lower_bound(ChamberPoint{values});
    const double rel = std::abs(got - expected) / expected;
    worst_rel = std::max(worst_rel, rel);
    if (rel > kWidthRelativeError) ++failures;

    const OrbitSpec spec{Group::Unitary, 3, ChamberPoint{values}};
    const auto S = image_polytope(spec);
    const double w = std::min(R, k) * (1.0 - 1e-6);
    const auto cert = find_axis_simplex(S, w);
    if (cert && certify_simplex(S, *cert)) ++certified;
  }
  Outcome out;
  out.pass = failures == 0 && certified == 20;
  out.detail = "worst relative error " + fmt(worst_rel) + ", " + std::to_string(certified) +
               "/20 simplices certified";
  return out;
}

// ---- criterion 8: pentagon bending system ----------------------------------

Outcome criterion_polygon() {
  const Stopwatch clock;
  const int n = 5;
  const Eigen::VectorXd lengths = Eigen::VectorXd::Ones(n);
  const auto T = TriangulationSpec::fan(n);
  const auto S = polygon_polytope(lengths, T);
  const auto verts = vertices(S);

  long bend_failures = 0;
  double worst_exact = 0.0, worst_diag = 0.0, worst_comm = 0.0;
  for (long i = 0; i < 100; ++i) {
    const auto P = sample_polygon(lengths, T, derive_seed(kSeed, 0x900 + i));
    Rng rng(derive_seed(kSeed, 0xA00 + i));
    const auto d1 = T.diagonals[i % T.diagonals.size()];
    const auto d2 = T.diagonals[(i + 1) % T.diagonals.size()];

    const auto Q = bend(P, d1, rng.uniform(0.3, 5.9));
    Eigen::Vector3d closure = Eigen::Vector3d::Zero();
    double defect = 0.0;
    for (int e = 0; e < n; ++e) {
      closure += Q.edges[e];
      defect = std::max(defect, std::abs(Q.edges[e].norm() - lengths[e]));
    }
    defect = std::max(defect, closure.cwiseAbs().maxCoeff());
    worst_exact = std::max(worst_exact, defect);
    if (defect > kBendExactness) ++bend_failures;

    const double drift = (diagonal_lengths(Q, T) - diagonal_lengths(P, T)).cwiseAbs().maxCoeff();
    worst_diag = std::max(worst_diag, drift);
    if (drift > kDiagonalDrift) ++bend_failures;

    const double a1 = rng.uniform(0.3, 5.9), a2 = rng.uniform(0.3, 5.9);
    const auto AB = bend(bend(P, d1, a1), d2, a2);
    const auto BA = bend(bend(P, d2, a2), d1, a1);
    double comm = 0.0;
    for (int e = 0; e < n; ++e)
      comm = std::max(comm, (AB.edges[e] - BA.edges[e]).cwiseAbs().maxCoeff());
    worst_comm = std::max(worst_comm, comm);
    if (comm > kBendCommutation) ++bend_failures;
  }

  std::vector<double> nearest(verts.size(), std::numeric_limits<double>::infinity());
  for (long i = 0; i < 10000; ++i) {
    const auto x = diagonal_lengths(sample_polygon(lengths, T, derive_seed(kSeed, 0xB000 + i)), T);
    for (std::size_t v = 0; v < verts.size(); ++v)
      nearest[v] = std::min(nearest[v], (x - verts[v]).cwiseAbs().maxCoeff());
  }
  const double coverage = *std::max_element(nearest.begin(), nearest.end());

  const double t = clock.seconds();
  Outcome out;
  out.pass = bend_failures == 0 && coverage <= kVertexCoverage && t < kBudgetPolygon;
  out.detail = std::to_string(bend_failures) + " bend failures (exactness " + fmt(worst_exact) +
               ", diagonals " + fmt(worst_diag) + ", commutation " + fmt(worst_comm) +
               "), vertex coverage " + fmt_fixed(coverage) + " over " +
               std::to_string(verts.size()) + " vertices, " + fmt_fixed(t) + " s";
  return out;
}

}  // namespace

int main() {
  struct Entry {
    std::string name;
    Outcome (*run)();
  };
  const std::vector<Entry> entries = {
      {"nested-spectra interlacing", criterion_interlacing},
      {"orbit image equals polytope", criterion_image_polytope},
      {"midpoint convexity and attainment", criterion_convexity},
      {"flow commutation and invariants", criterion_flows},
      {"fibre connectivity by flows", criterion_fibre_connectivity},
      {"fixture inequality sets", criterion_fixtures},
      {"width bound and simplex certificate", criterion_width},
      {"pentagon bending system", criterion_polygon},
  };

  int failed = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    Outcome out;
    try {
      out = entries[i].run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    print_line(static_cast<int>(i) + 1, entries[i].name, out);
    if (!out.pass) ++failed;
  }
  std::cout << "acceptance: " << (entries.size() - failed) << "/" << entries.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
