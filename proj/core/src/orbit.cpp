#include "gz/orbit.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include "gz/rng.hpp"

namespace gz {

namespace {

// Largest-modulus entry of each column is rotated to the positive real axis.
// Removes the phase gauge so decompositions of equal inputs agree bitwise.
void canonicalize_columns(Eigen::MatrixXcd& U) {
  for (Eigen::Index c = 0; c < U.cols(); ++c) {
    Eigen::Index r = 0;
    U.col(c).cwiseAbs().maxCoeff(&r);
    const std::complex<double> pivot = U(r, c);
    const double mag = std::abs(pivot);
    if (mag > 0.0) U.col(c) *= std::conj(pivot) / mag;
  }
}

Eigen::MatrixXcd gaussian_complex(int n, Rng& rng) {
  Eigen::MatrixXcd G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = rng.gaussian();
      const double im = rng.gaussian();
      G(i, j) = std::complex<double>(re, im);
    }
  return G;
}

Eigen::MatrixXd gaussian_real(int n, Rng& rng) {
  Eigen::MatrixXd G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = rng.gaussian();
  return G;
}

// QR-based orthonormalization with the diagonal of R rotated positive, the
// usual trick to make the Q factor a well-defined function of the input.
Eigen::MatrixXcd orthonormalize(const Eigen::MatrixXcd& G) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(G);
  Eigen::MatrixXcd Q = qr.householderQ();
  const Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index c = 0; c < Q.cols(); ++c) {
    const std::complex<double> d = R(c, c);
    const double mag = std::abs(d);
    if (mag > 0.0) Q.col(c) *= d / mag;
  }
  return Q;
}

Eigen::MatrixXd orthonormalize_real(const Eigen::MatrixXd& G) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
  Eigen::MatrixXd Q = qr.householderQ();
  const Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index c = 0; c < Q.cols(); ++c)
    if (R(c, c) < 0.0) Q.col(c) = -Q.col(c);
  return Q;
}

SpectralDecomposition decompose_hermitian(const MatrixPoint& A) {
  // Solve on the symmetrized matrix; validation already bounded the defect.
  const Eigen::MatrixXcd H = 0.5 * (A.entries + A.entries.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H);
  if (solver.info() != Eigen::Success)
    fail(ErrorCode::BadInput, "eigenvalue iteration failed to converge");

  // Eigen sorts ascending; reindex descending, keeping ties in their original
  // order so e.g. the zero matrix comes back with the identity frame.
  const int n = A.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return solver.eigenvalues()[a] > solver.eigenvalues()[b];
  });

  SpectralDecomposition out;
  out.values.resize(n);
  out.frame.resize(n, n);
  for (int i = 0; i < n; ++i) {
    out.values[i] = solver.eigenvalues()[order[i]];
    out.frame.col(i) = solver.eigenvectors().col(order[i]);
  }
  canonicalize_columns(out.frame);
  return out;
}

// Real Schur form of a skew-symmetric matrix is block diagonal with 2x2
// blocks [[0, b], [-b, 0]] and zero 1x1 blocks. Columns are regrouped so the
// frame realizes blockdiag(B(mu_1), ..., B(mu_m)[, 0]) with mu sorted
// descending: 2x2 blocks keep their column pair (swapped when b < 0), zero
// columns are paired up into B(0) blocks, one leftover column stays last for
// odd n.
SpectralDecomposition decompose_skew(const MatrixPoint& A) {
  const int n = A.n();
  const Eigen::MatrixXd S_raw = A.entries.real();
  const Eigen::MatrixXd S = 0.5 * (S_raw - S_raw.transpose());

  Eigen::RealSchur<Eigen::MatrixXd> schur(S);
  if (schur.info() != Eigen::Success)
    fail(ErrorCode::BadInput, "Schur iteration failed to converge");
  const Eigen::MatrixXd& T = schur.matrixT();
  const Eigen::MatrixXd& Q = schur.matrixU();

  struct Block {
    double mu;
    int c0, c1;
  };
  std::vector<Block> blocks;
  std::vector<int> zero_cols;
  int i = 0;
  while (i < n) {
    if (i + 1 < n && T(i + 1, i) != 0.0) {
      const double b = 0.5 * (T(i, i + 1) - T(i + 1, i));
      if (b >= 0.0)
        blocks.push_back({b, i, i + 1});
      else
        blocks.push_back({-b, i + 1, i});
      i += 2;
    } else {
      zero_cols.push_back(i);
      i += 1;
    }
  }
  for (std::size_t z = 0; z + 1 < zero_cols.size(); z += 2)
    blocks.push_back({0.0, zero_cols[z], zero_cols[z + 1]});

  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const Block& x, const Block& y) { return x.mu > y.mu; });

  SpectralDecomposition out;
  out.values.resize(n / 2);
  Eigen::MatrixXd frame(n, n);
  int col = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    out.values[static_cast<int>(b)] = blocks[b].mu;
    frame.col(col++) = Q.col(blocks[b].c0);
    frame.col(col++) = Q.col(blocks[b].c1);
  }
  if (zero_cols.size() % 2 == 1) frame.col(col++) = Q.col(zero_cols.back());

  // Sign gauge: first nonzero entry of the leading column of each pair (and
  // of the leftover column) made positive; the partner column follows suit to
  // keep the block form intact.
  for (int c = 0; c < n; c += 2) {
    Eigen::Index r = 0;
    frame.col(c).cwiseAbs().maxCoeff(&r);
    if (frame(r, c) < 0.0) {
      frame.col(c) = -frame.col(c);
      if (c + 1 < n) frame.col(c + 1) = -frame.col(c + 1);
    }
  }

  out.frame = frame.cast<std::complex<double>>();
  return out;
}

}  // namespace

void validate_matrix_point(const MatrixPoint& A, const Tolerances& tol) {
  if (A.entries.rows() != A.entries.cols())
    fail(ErrorCode::ShapeMismatch, "matrix point must be square, got " +
                                       std::to_string(A.entries.rows()) + "x" +
                                       std::to_string(A.entries.cols()));
  if (A.n() == 0) fail(ErrorCode::ShapeMismatch, "matrix point must be nonempty");

  const double bound = tol.symmetry * A.scale();
  if (A.group == Group::Unitary) {
    const double defect = (A.entries - A.entries.adjoint()).cwiseAbs().maxCoeff();
    if (defect > bound)
      fail(ErrorCode::NonSymmetric,
           "matrix is not Hermitian, defect " + std::to_string(defect));
  } else {
    const double imag = A.entries.imag().cwiseAbs().maxCoeff();
    if (imag > bound)
      fail(ErrorCode::NonSymmetric,
           "so-type matrix must be real, imaginary defect " + std::to_string(imag));
    const Eigen::MatrixXd S = A.entries.real();
    const double defect = (S + S.transpose()).cwiseAbs().maxCoeff();
    if (defect > bound)
      fail(ErrorCode::NonSymmetric,
           "matrix is not skew-symmetric, defect " + std::to_string(defect));
  }
}

void validate_orbit_spec(const OrbitSpec& spec) {
  if (spec.n < 1) fail(ErrorCode::BadInput, "orbit size must be positive");
  const int want = chamber_length(spec.group, spec.n);
  if (spec.spectrum.values.size() != want)
    fail(ErrorCode::ShapeMismatch,
         "spectrum has " + std::to_string(spec.spectrum.values.size()) +
             " entries, expected " + std::to_string(want));
  for (int i = 0; i + 1 < want; ++i)
    if (spec.spectrum.values[i] < spec.spectrum.values[i + 1])
      fail(ErrorCode::BadInput, "spectrum must be weakly decreasing");
  if (spec.group == Group::SpecialOrthogonal && want > 0 &&
      spec.spectrum.values[want - 1] < 0.0)
    fail(ErrorCode::BadInput, "so-type spectrum entries must be nonnegative");
}

MatrixPoint leading_block(const MatrixPoint& A, int k) {
  if (k < 1 || k > A.n())
    fail(ErrorCode::ShapeMismatch,
         "leading block size " + std::to_string(k) + " out of range for n=" +
             std::to_string(A.n()));
  return MatrixPoint{A.group, A.entries.topLeftCorner(k, k)};
}

Eigen::MatrixXcd normal_form(Group g, int n, const Eigen::VectorXd& values) {
  if (values.size() != chamber_length(g, n))
    fail(ErrorCode::ShapeMismatch, "normal form needs " +
                                       std::to_string(chamber_length(g, n)) +
                                       " chamber values");
  Eigen::MatrixXcd N = Eigen::MatrixXcd::Zero(n, n);
  if (g == Group::Unitary) {
    for (int i = 0; i < n; ++i) N(i, i) = values[i];
  } else {
    for (int b = 0; b < n / 2; ++b) {
      N(2 * b, 2 * b + 1) = values[b];
      N(2 * b + 1, 2 * b) = -values[b];
    }
  }
  return N;
}

SpectralDecomposition spectral_decomposition(const MatrixPoint& A, const Tolerances& tol) {
  validate_matrix_point(A, tol);
  return A.group == Group::Unitary ? decompose_hermitian(A) : decompose_skew(A);
}

ChamberPoint sweep(const MatrixPoint& A, const Tolerances& tol) {
  ChamberPoint out;
  out.values = spectral_decomposition(A, tol).values;
  // Both backends already sort; keep the guarantee explicit.
  std::stable_sort(out.values.data(), out.values.data() + out.values.size(),
                   std::greater<double>());
  return out;
}

MatrixPoint sample_orbit(const OrbitSpec& spec, std::uint64_t seed) {
  validate_orbit_spec(spec);
  const int n = spec.n;

  // Scalar orbits are a single point; return it exactly rather than through a
  // conjugation that would smear the entries by roundoff.
  if (spec.group == Group::Unitary && n > 0 &&
      spec.spectrum.values.minCoeff() == spec.spectrum.values.maxCoeff()) {
    return MatrixPoint{spec.group,
                       spec.spectrum.values[0] *
                           Eigen::MatrixXcd::Identity(n, n)};
  }

  const Eigen::MatrixXcd N = normal_form(spec.group, n, spec.spectrum.values);
  Rng rng(seed);
  if (spec.group == Group::Unitary) {
    const Eigen::MatrixXcd Q = orthonormalize(gaussian_complex(n, rng));
    Eigen::MatrixXcd A = Q * N * Q.adjoint();
    A = 0.5 * (A + A.adjoint());
    return MatrixPoint{spec.group, A};
  }
  const Eigen::MatrixXd Q = orthonormalize_real(gaussian_real(n, rng));
  Eigen::MatrixXd S = Q * N.real() * Q.transpose();
  S = 0.5 * (S - S.transpose());
  return MatrixPoint{spec.group, S.cast<std::complex<double>>()};
}

Eigen::MatrixXcd random_unitary(int n, std::uint64_t seed) {
  if (n < 1) fail(ErrorCode::ShapeMismatch, "size must be positive");
  Rng rng(seed);
  return orthonormalize(gaussian_complex(n, rng));
}

Eigen::MatrixXd random_special_orthogonal(int n, std::uint64_t seed) {
  if (n < 1) fail(ErrorCode::ShapeMismatch, "size must be positive");
  Rng rng(seed);
  Eigen::MatrixXd Q = orthonormalize_real(gaussian_real(n, rng));
  if (Q.determinant() < 0.0) Q.col(n - 1) = -Q.col(n - 1);
  return Q;
}

MatrixPoint random_matrix_point(Group g, int n, std::uint64_t seed) {
  if (n < 1) fail(ErrorCode::ShapeMismatch, "size must be positive");
  Rng rng(seed);
  if (g == Group::Unitary) {
    const Eigen::MatrixXcd G = gaussian_complex(n, rng);
    return MatrixPoint{g, 0.5 * (G + G.adjoint())};
  }
  const Eigen::MatrixXd G = gaussian_real(n, rng);
  const Eigen::MatrixXd S = 0.5 * (G - G.transpose());
  return MatrixPoint{g, S.cast<std::complex<double>>()};
}

}  // namespace gz
