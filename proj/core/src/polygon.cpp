#include "gz/polygon.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gz/errors.hpp"
#include "gz/rng.hpp"

namespace gz {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kChordFloor = 1e-8;
constexpr int kMaxDraws = 100000;

double polygon_scale(const Eigen::VectorXd& lengths) {
  return 1.0 + (lengths.size() > 0 ? lengths.maxCoeff() : 0.0);
}

void check_run(int n, std::pair<int, int> run) {
  const auto [i, j] = run;
  const int len = j - i + 1;
  if (i < 1 || j > n || i > j || len < 2 || len > n - 2)
    fail(ErrorCode::InvalidTriangulation,
         "edge run (" + std::to_string(i) + ", " + std::to_string(j) +
             ") is not a proper diagonal of an n=" + std::to_string(n) + " polygon");
}

Eigen::Vector3d run_vector(const PolygonConfig& P, std::pair<int, int> run) {
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  for (int k = run.first; k <= run.second; ++k) v += P.edges[k - 1];
  return v;
}

// Triangle side values: a polygon edge contributes its pinned length, a
// diagonal its current variable value. Vertex pair keys, p < q.
struct SideValues {
  int n = 0;
  const Eigen::VectorXd* lengths = nullptr;
  std::map<std::pair<int, int>, int> var;  // diagonal vertex pair -> variable

  bool is_variable(std::pair<int, int> side) const { return var.count(side) > 0; }

  double value(std::pair<int, int> side, const Eigen::VectorXd& x) const {
    const auto it = var.find(side);
    if (it != var.end()) return x[it->second];
    if (side.first == 0 && side.second == n - 1) return (*lengths)[n - 1];
    return (*lengths)[side.first];  // edge side.first+1 spans (p, p+1)
  }
};

SideValues make_side_values(int n, const Eigen::VectorXd& lengths,
                            const TriangulationSpec& T) {
  SideValues sv;
  sv.n = n;
  sv.lengths = &lengths;
  for (std::size_t t = 0; t < T.diagonals.size(); ++t)
    sv.var[{T.diagonals[t].first - 1, T.diagonals[t].second}] = static_cast<int>(t);
  return sv;
}

void split_interval(int p, int q,
                    const std::function<bool(std::pair<int, int>)>& is_side,
                    std::vector<std::array<std::pair<int, int>, 3>>& out) {
  if (q - p < 2) return;
  int r = -1;
  for (int c = p + 1; c < q; ++c)
    if (is_side({p, c}) && is_side({c, q})) {
      r = c;
      break;
    }
  if (r < 0)
    fail(ErrorCode::InvalidTriangulation,
         "no triangle closes the chord (" + std::to_string(p) + ", " +
             std::to_string(q) + ")");
  out.push_back({std::pair<int, int>{p, r}, {r, q}, {p, q}});
  split_interval(p, r, is_side, out);
  split_interval(r, q, is_side, out);
}

}  // namespace

TriangulationSpec TriangulationSpec::fan(int n) {
  TriangulationSpec T;
  for (int j = 2; j <= n - 2; ++j) T.diagonals.push_back({1, j});
  return T;
}

void validate_polygon(const PolygonConfig& P) {
  if (P.lengths.size() != static_cast<int>(P.edges.size()))
    fail(ErrorCode::ShapeMismatch,
         "polygon has " + std::to_string(P.edges.size()) + " edges but " +
             std::to_string(P.lengths.size()) + " pinned lengths");
  if (P.n() < 3) fail(ErrorCode::BadInput, "polygons need at least 3 edges");
  for (int i = 0; i < P.n(); ++i)
    if (!(P.lengths[i] > 0.0))
      fail(ErrorCode::BadInput, "edge lengths must be positive");

  const double tol = 1e-9 * polygon_scale(P.lengths);
  Eigen::Vector3d s = Eigen::Vector3d::Zero();
  for (const auto& e : P.edges) s += e;
  if (s.cwiseAbs().maxCoeff() > tol)
    fail(ErrorCode::BadInput, "edge vectors do not close up");
  for (int i = 0; i < P.n(); ++i)
    if (std::abs(P.edges[i].norm() - P.lengths[i]) > tol)
      fail(ErrorCode::BadInput,
           "edge " + std::to_string(i + 1) + " does not match its pinned length");
}

void validate_triangulation(int n, const TriangulationSpec& T) {
  if (n < 3) fail(ErrorCode::BadInput, "polygons need at least 3 edges");
  if (static_cast<int>(T.diagonals.size()) != n - 3)
    fail(ErrorCode::InvalidTriangulation,
         "a triangulation of an n-gon has n-3 diagonals, got " +
             std::to_string(T.diagonals.size()));
  for (const auto& d : T.diagonals) check_run(n, d);
  for (std::size_t a = 0; a < T.diagonals.size(); ++a)
    for (std::size_t b = a + 1; b < T.diagonals.size(); ++b) {
      const auto [i1, j1] = T.diagonals[a];
      const auto [i2, j2] = T.diagonals[b];
      if (i1 == i2 && j1 == j2)
        fail(ErrorCode::InvalidTriangulation, "duplicate diagonal");
      const bool disjoint = j1 < i2 || j2 < i1;
      const bool nested = (i1 <= i2 && j2 <= j1) || (i2 <= i1 && j1 <= j2);
      if (!disjoint && !nested)
        fail(ErrorCode::InvalidTriangulation,
             "diagonals (" + std::to_string(i1) + "," + std::to_string(j1) +
                 ") and (" + std::to_string(i2) + "," + std::to_string(j2) +
                 ") cross");
    }
}

std::vector<std::array<std::pair<int, int>, 3>> triangulation_triangles(
    int n, const TriangulationSpec& T) {
  validate_triangulation(n, T);
  std::set<std::pair<int, int>> diag;
  for (const auto& d : T.diagonals) diag.insert({d.first - 1, d.second});
  const auto is_side = [&](std::pair<int, int> s) {
    return s.second - s.first == 1 || (s.first == 0 && s.second == n - 1) ||
           diag.count(s) > 0;
  };
  std::vector<std::array<std::pair<int, int>, 3>> out;
  split_interval(0, n - 1, is_side, out);
  return out;
}

Eigen::VectorXd diagonal_lengths(const PolygonConfig& P, const TriangulationSpec& T) {
  validate_polygon(P);
  Eigen::VectorXd out(static_cast<int>(T.diagonals.size()));
  for (std::size_t t = 0; t < T.diagonals.size(); ++t) {
    check_run(P.n(), T.diagonals[t]);
    out[static_cast<int>(t)] = run_vector(P, T.diagonals[t]).norm();
  }
  return out;
}

PolygonConfig bend(const PolygonConfig& P, std::pair<int, int> diagonal, double angle) {
  validate_polygon(P);
  check_run(P.n(), diagonal);
  if (angle == 0.0) return P;

  const Eigen::Vector3d chord = run_vector(P, diagonal);
  if (chord.norm() < kChordFloor)
    fail(ErrorCode::DegenerateDiagonal,
         "chord (" + std::to_string(diagonal.first) + ", " +
             std::to_string(diagonal.second) +
             ") has collapsed; its bend axis is undefined");

  const Eigen::Matrix3d R =
      Eigen::AngleAxisd(angle, chord.normalized()).toRotationMatrix();
  PolygonConfig Q = P;
  for (int k = diagonal.first; k <= diagonal.second; ++k)
    Q.edges[k - 1] = R * P.edges[k - 1];
  return Q;
}

InequalitySystem polygon_polytope(const Eigen::VectorXd& lengths,
                                  const TriangulationSpec& T) {
  const int n = static_cast<int>(lengths.size());
  if (n < 3) fail(ErrorCode::BadInput, "polygons need at least 3 edges");
  for (int i = 0; i < n; ++i)
    if (!(lengths[i] > 0.0)) fail(ErrorCode::BadInput, "edge lengths must be positive");
  validate_triangulation(n, T);

  const SideValues sv = make_side_values(n, lengths, T);
  InequalitySystem S;
  S.dim = static_cast<int>(T.diagonals.size());
  S.layout = T.diagonals;

  const auto push_unique = [&](const Halfspace& row) {
    for (const auto& have : S.rows)
      if (have.a == row.a && have.kappa == row.kappa) return;
    S.rows.push_back(row);
  };

  const Eigen::VectorXd no_vars;
  for (const auto& tri : triangulation_triangles(n, T)) {
    for (int major = 0; major < 3; ++major) {
      Halfspace row;
      row.a = Eigen::VectorXd::Zero(S.dim);
      row.kappa = 0.0;
      bool has_variable = false;
      for (int s = 0; s < 3; ++s) {
        const double sign = s == major ? 1.0 : -1.0;
        if (sv.is_variable(tri[s])) {
          row.a[sv.var.at(tri[s])] += sign;
          has_variable = true;
        } else {
          row.kappa -= sign * sv.value(tri[s], no_vars);
        }
      }
      if (has_variable) push_unique(row);
    }
  }
  for (int v = 0; v < S.dim; ++v) {
    Halfspace row;
    row.a = Eigen::VectorXd::Zero(S.dim);
    row.a[v] = -1.0;
    row.kappa = 0.0;
    push_unique(row);
  }
  return S;
}

PolygonConfig sample_polygon(const Eigen::VectorXd& lengths, const TriangulationSpec& T,
                             std::uint64_t seed) {
  const int n = static_cast<int>(lengths.size());
  if (n < 3) fail(ErrorCode::BadInput, "polygons need at least 3 edges");
  for (int i = 0; i < n; ++i)
    if (!(lengths[i] > 0.0)) fail(ErrorCode::BadInput, "edge lengths must be positive");
  validate_triangulation(n, T);

  const auto triangles = triangulation_triangles(n, T);
  const SideValues sv = make_side_values(n, lengths, T);
  const int nvars = static_cast<int>(T.diagonals.size());
  const double total = lengths.sum();

  // Per-variable draw interval: a chord is at most the shorter of its run sum
  // and the complementary run sum.
  Eigen::VectorXd ub(nvars);
  for (int v = 0; v < nvars; ++v) {
    double run = 0.0;
    for (int k = T.diagonals[v].first; k <= T.diagonals[v].second; ++k)
      run += lengths[k - 1];
    ub[v] = std::min(run, total - run);
  }

  Rng rng(seed);
  Eigen::VectorXd x(nvars);
  bool accepted = false;
  for (int draw = 0; draw < kMaxDraws && !accepted; ++draw) {
    for (int v = 0; v < nvars; ++v) x[v] = rng.uniform(0.0, ub[v]);
    accepted = true;
    for (const auto& tri : triangles) {
      const double a = sv.value(tri[0], x);
      const double b = sv.value(tri[1], x);
      const double c = sv.value(tri[2], x);
      if (a > b + c || b > a + c || c > a + b) {
        accepted = false;
        break;
      }
    }
  }
  if (!accepted)
    fail(ErrorCode::EmptyModuli, "no closed polygon realizes these edge lengths (" +
                                     std::to_string(kMaxDraws) + " draws rejected)");

  // Planar realization: each triangle apex is placed on the left of its base
  // chord, recursing down the triangulation from the closing edge.
  std::set<std::pair<int, int>> diag;
  for (const auto& d : T.diagonals) diag.insert({d.first - 1, d.second});
  const auto is_side = [&](std::pair<int, int> s) {
    return s.second - s.first == 1 || (s.first == 0 && s.second == n - 1) ||
           diag.count(s) > 0;
  };
  std::vector<Eigen::Vector3d> pos(n, Eigen::Vector3d::Zero());
  pos[n - 1] = Eigen::Vector3d(lengths[n - 1], 0.0, 0.0);
  const std::function<void(int, int)> place = [&](int p, int q) {
    if (q - p < 2) return;
    int r = -1;
    for (int c = p + 1; c < q; ++c)
      if (is_side({p, c}) && is_side({c, q})) {
        r = c;
        break;
      }
    const double a = sv.value({p, r}, x);
    const double b = sv.value({r, q}, x);
    const Eigen::Vector3d base = pos[q] - pos[p];
    const double d = base.norm();
    if (d < 1e-12) {
      pos[r] = pos[p] + a * Eigen::Vector3d::UnitX();
    } else {
      const Eigen::Vector3d u = base / d;
      const Eigen::Vector3d nrm(-u[1], u[0], 0.0);
      const double t = (a * a - b * b + d * d) / (2.0 * d);
      const double h2 = a * a - t * t;
      pos[r] = pos[p] + t * u + std::sqrt(std::max(h2, 0.0)) * nrm;
    }
    place(p, r);
    place(r, q);
  };
  place(0, n - 1);

  PolygonConfig P;
  P.lengths = lengths;
  P.edges.resize(n);
  for (int k = 1; k < n; ++k) P.edges[k - 1] = pos[k] - pos[k - 1];
  P.edges[n - 1] = pos[0] - pos[n - 1];

  // Random bends about every diagonal in turn spread the sample over the
  // whole fibre of the drawn diagonal lengths.
  for (const auto& dg : T.diagonals) {
    const double angle = rng.uniform(0.0, kTwoPi);
    const Eigen::Vector3d chord = run_vector(P, dg);
    if (chord.norm() < kChordFloor) continue;
    const Eigen::Matrix3d R =
        Eigen::AngleAxisd(angle, chord.normalized()).toRotationMatrix();
    for (int k = dg.first; k <= dg.second; ++k) P.edges[k - 1] = R * P.edges[k - 1];
  }

  validate_polygon(P);
  return P;
}

PolygonConfig canonicalize(const PolygonConfig& P) {
  validate_polygon(P);
  const double tiny = 1e-12 * polygon_scale(P.lengths);

  const Eigen::Vector3d u1 = P.edges[0].normalized();
  Eigen::Vector3d w = P.edges[1] - P.edges[1].dot(u1) * u1;
  if (w.norm() <= tiny) {
    // collinear first two edges: any frame completing u1 fixes the gauge
    const Eigen::Vector3d pick =
        std::abs(u1[2]) < 0.9 ? Eigen::Vector3d::UnitZ() : Eigen::Vector3d::UnitX();
    w = pick - pick.dot(u1) * u1;
  }
  const Eigen::Vector3d u2 = w.normalized();
  const Eigen::Vector3d u3 = u1.cross(u2);

  PolygonConfig Q = P;
  for (int k = 0; k < P.n(); ++k)
    Q.edges[k] = Eigen::Vector3d(P.edges[k].dot(u1), P.edges[k].dot(u2),
                                 P.edges[k].dot(u3));
  return Q;
}

}  // namespace gz
