#include "gz/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "gz/rng.hpp"

namespace gz {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_unitary(Group g, const char* what) {
  if (g != Group::Unitary)
    fail(ErrorCode::UnsupportedGroup,
         std::string(what) + " is implemented for the unitary tower only");
}

}  // namespace

PhaseVector PhaseVector::zero(int n) {
  PhaseVector out;
  for (int k = 1; k < n; ++k) out.phases.push_back(Eigen::VectorXd::Zero(k));
  return out;
}

PhaseVector PhaseVector::random(int n, std::uint64_t seed) {
  Rng rng(seed);
  PhaseVector out;
  for (int k = 1; k < n; ++k) {
    Eigen::VectorXd row(k);
    for (int i = 0; i < k; ++i) row[i] = rng.uniform(0.0, kTwoPi);
    out.phases.push_back(std::move(row));
  }
  return out;
}

MatrixPoint border_once(const MatrixPoint& A, const Eigen::VectorXd& target,
                        const Eigen::VectorXd& phases, const Tolerances& tol) {
  require_unitary(A.group, "the bordering step");
  validate_matrix_point(A, tol);
  const int k = A.n();
  if (target.size() != k + 1)
    fail(ErrorCode::ShapeMismatch, "target spectrum needs " + std::to_string(k + 1) +
                                       " entries, got " + std::to_string(target.size()));
  if (phases.size() != k)
    fail(ErrorCode::ShapeMismatch, "border needs " + std::to_string(k) +
                                       " phases, got " + std::to_string(phases.size()));

  const double scale =
      1.0 + std::max(A.max_norm(), target.size() > 0 ? target.cwiseAbs().maxCoeff() : 0.0);

  const SpectralDecomposition sd = spectral_decomposition(A, tol);
  const Eigen::VectorXd& mu = sd.values;

  const double slack = tol.interlacing_slack * scale;
  for (int i = 0; i + 1 < k + 1; ++i)
    if (target[i] < target[i + 1] - slack)
      fail(ErrorCode::BadInput, "target spectrum must be weakly decreasing");
  for (int i = 0; i < k; ++i) {
    if (mu[i] > target[i] + slack || mu[i] < target[i + 1] - slack)
      fail(ErrorCode::NotInterlacing,
           "inner spectrum does not interlace the target at position " +
               std::to_string(i + 1));
  }

  // Deflation: an inner eigenvalue that coincides with a target value keeps
  // its eigenvector untouched (border weight zero) and both values drop out
  // of every product below. Greedy closest-match pairing within the tie
  // tolerance; interlacing guarantees a coincidence can be paired this way.
  const double tie = tol.deflation_tie * scale;
  std::vector<bool> mu_active(k, true), target_active(k + 1, true);
  for (int i = 0; i < k; ++i) {
    int best = -1;
    double best_d = tie;
    for (int j = 0; j < k + 1; ++j) {
      if (!target_active[j]) continue;
      const double d = std::abs(mu[i] - target[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best >= 0) {
      mu_active[i] = false;
      target_active[best] = false;
    }
  }

  const double clamp = tol.radicand_clamp * scale * scale;
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(k);
  for (int i = 0; i < k; ++i) {
    if (!mu_active[i]) continue;
    double num = 1.0;
    for (int j = 0; j < k + 1; ++j)
      if (target_active[j]) num *= mu[i] - target[j];
    double den = 1.0;
    for (int i2 = 0; i2 < k; ++i2)
      if (i2 != i && mu_active[i2]) den *= mu[i] - mu[i2];
    const double radicand = -num / den;
    if (radicand < -clamp)
      fail(ErrorCode::NegativeRadicand,
           "border weight squared is " + std::to_string(radicand) +
               " at inner eigenvalue " + std::to_string(i + 1));
    beta[i] = std::sqrt(std::max(radicand, 0.0));
  }

  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(k);
  for (int i = 0; i < k; ++i) {
    if (beta[i] == 0.0) continue;
    b += beta[i] * std::polar(1.0, phases[i]) * sd.frame.col(i);
  }

  MatrixPoint out;
  out.group = Group::Unitary;
  out.entries.resize(k + 1, k + 1);
  out.entries.topLeftCorner(k, k) = A.entries;
  out.entries.topRightCorner(k, 1) = b;
  out.entries.bottomLeftCorner(1, k) = b.adjoint();
  out.entries(k, k) = target.sum() - A.entries.trace().real();
  return out;
}

MatrixPoint inverse_gz(const GZPattern& p, const PhaseVector& phases, const Tolerances& tol) {
  require_unitary(p.group, "pattern reconstruction");
  validate_pattern_shape(p);
  if (!p.full_chain())
    fail(ErrorCode::UnsupportedPair, "pattern reconstruction needs the full chain");
  if (!check_interlacing(p, tol.interlacing_slack))
    fail(ErrorCode::NotInterlacing, "pattern rows do not interlace");

  const int n = p.n();
  if (static_cast<int>(phases.phases.size()) != n - 1)
    fail(ErrorCode::ShapeMismatch, "phase vector needs " + std::to_string(n - 1) +
                                       " rows, got " + std::to_string(phases.phases.size()));

  MatrixPoint A;
  A.group = Group::Unitary;
  A.entries = Eigen::MatrixXcd::Constant(1, 1, p.rows[0][0]);
  for (int k = 1; k < n; ++k)
    A = border_once(A, p.rows[k], phases.phases[k - 1], tol);
  return A;
}

MatrixPoint inverse_gz(const GZPattern& p, const Tolerances& tol) {
  return inverse_gz(p, PhaseVector::zero(p.n()), tol);
}

std::vector<MatrixPoint> sample_fibre(const GZPattern& p, int count, std::uint64_t seed,
                                      const Tolerances& tol) {
  require_unitary(p.group, "fibre sampling");
  validate_pattern_shape(p);
  if (!is_regular(p, tol.regularity_gap * p.scale()))
    fail(ErrorCode::NotRegular,
         "fibre sampling needs a regular pattern; some interlacing gap is too small");
  if (count < 0) fail(ErrorCode::BadInput, "negative sample count");

  std::vector<MatrixPoint> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i)
    out.push_back(inverse_gz(p, PhaseVector::random(p.n(), derive_seed(seed, i)), tol));
  return out;
}

}  // namespace gz
