#include "gz/flow.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace gz {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void validate_flow_spec(const MatrixPoint& A, const FlowSpec& f) {
  if (A.group != Group::Unitary)
    fail(ErrorCode::UnsupportedGroup, "torus flows are implemented for the unitary tower only");
  if (f.level < 1 || f.level > A.n())
    fail(ErrorCode::BadInput, "flow level " + std::to_string(f.level) +
                                  " out of range 1.." + std::to_string(A.n()));
  if (f.index < 1 || f.index > f.level)
    fail(ErrorCode::BadInput, "flow index " + std::to_string(f.index) +
                                  " out of range 1.." + std::to_string(f.level));
}

}  // namespace

MatrixPoint gz_flow(const MatrixPoint& A, const FlowSpec& f, const Tolerances& tol) {
  validate_flow_spec(A, f);
  validate_matrix_point(A, tol);

  const int n = A.n();
  const int k = f.level;
  const SpectralDecomposition sd = spectral_decomposition(leading_block(A, k), tol);

  // The rotation is well defined only while the chosen eigenvalue stays
  // simple; a collapsed gap means the projector (and the flow) degenerates.
  const double gap_bound = tol.flow_gap * A.scale();
  const int i = f.index - 1;
  if (i > 0 && sd.values[i - 1] - sd.values[i] <= gap_bound)
    fail(ErrorCode::DegenerateLevel,
         "eigenvalue " + std::to_string(f.index) + " of the level-" +
             std::to_string(k) + " block collides with its predecessor");
  if (i + 1 < k && sd.values[i] - sd.values[i + 1] <= gap_bound)
    fail(ErrorCode::DegenerateLevel,
         "eigenvalue " + std::to_string(f.index) + " of the level-" +
             std::to_string(k) + " block collides with its successor");

  // U = I + (e^{i angle} - 1) P with P the rank-1 projector; angle 0 gives
  // exactly the identity, so the flow is exactly trivial there.
  const std::complex<double> w =
      std::polar(1.0, f.angle) - std::complex<double>(1.0, 0.0);
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::VectorXcd u = sd.frame.col(i);
  U.topLeftCorner(k, k) += w * (u * u.adjoint());

  return MatrixPoint{A.group, U * A.entries * U.adjoint()};
}

double verify_commutation(const MatrixPoint& A, const FlowSpec& f, const FlowSpec& g,
                          const Tolerances& tol) {
  const MatrixPoint fg = gz_flow(gz_flow(A, f, tol), g, tol);
  const MatrixPoint gf = gz_flow(gz_flow(A, g, tol), f, tol);
  return (fg.entries - gf.entries).cwiseAbs().maxCoeff();
}

FlowSearchResult connect_by_flows(const MatrixPoint& A, const MatrixPoint& B, double target,
                                  int grid, int refine_rounds, const Tolerances& tol) {
  validate_matrix_point(A, tol);
  validate_matrix_point(B, tol);
  if (A.group != Group::Unitary)
    fail(ErrorCode::UnsupportedGroup, "torus flows are implemented for the unitary tower only");
  if (A.n() != B.n())
    fail(ErrorCode::ShapeMismatch, "endpoints have different sizes");
  if (grid < 2) fail(ErrorCode::BadInput, "grid must have at least 2 points per axis");

  const int n = A.n();
  std::vector<FlowSpec> dirs;
  for (int level = 1; level < n; ++level)
    for (int index = 1; index <= level; ++index) dirs.push_back({level, index, 0.0});
  const int d = static_cast<int>(dirs.size());

  FlowSearchResult res;
  res.angles = dirs;

  auto composite_distance = [&](const std::vector<double>& angles) {
    MatrixPoint X = A;
    for (int j = 0; j < d; ++j)
      X = gz_flow(X, {dirs[j].level, dirs[j].index, angles[j]}, tol);
    ++res.evaluations;
    return (X.entries - B.entries).cwiseAbs().maxCoeff();
  };

  // Thin the per-axis grid when the direction count makes the full product
  // unaffordable; the refinement stage picks up the lost resolution.
  int per_axis = grid;
  double budget = 1e6;
  while (per_axis > 2 && std::pow(static_cast<double>(per_axis), d) > budget) --per_axis;

  std::vector<double> best(d, 0.0);
  double best_dist = composite_distance(best);
  std::vector<int> at(d, 0);
  while (true) {
    std::vector<double> angles(d);
    for (int j = 0; j < d; ++j) angles[j] = kTwoPi * at[j] / per_axis;
    const double dist = composite_distance(angles);
    if (dist < best_dist) {
      best_dist = dist;
      best = angles;
    }
    int j = d - 1;
    while (j >= 0 && at[j] + 1 == per_axis) at[j--] = 0;
    if (j < 0) break;
    ++at[j];
  }

  // Cyclic coordinate descent with a shrinking step.
  double step = kTwoPi / per_axis;
  for (int round = 0; round < refine_rounds && best_dist > target; ++round) {
    bool improved = false;
    for (int j = 0; j < d; ++j) {
      for (const double s : {step, -step}) {
        std::vector<double> trial = best;
        trial[j] += s;
        const double dist = composite_distance(trial);
        if (dist < best_dist) {
          best_dist = dist;
          best = trial;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }

  res.found = best_dist <= target;
  res.distance = best_dist;
  for (int j = 0; j < d; ++j) res.angles[j].angle = best[j];
  return res;
}

}  // namespace gz
