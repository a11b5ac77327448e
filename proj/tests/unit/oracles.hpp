#pragma once

// Independent oracles for the test suite. Nothing here calls into gz_core's
// spectral code: determinants are hand-rolled Gaussian elimination, 2x2
// spectra come from the quadratic formula, interlacing is written out with
// explicit loops. Expected values frozen from these oracles are the ground
// truth the library is checked against.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

// Determinant by partial-pivot elimination (no Eigen solver involved).
inline std::complex<double> det(Eigen::MatrixXcd m) {
  const int n = static_cast<int>(m.rows());
  std::complex<double> d = 1.0;
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(m(r, c)) > std::abs(m(pivot, c))) pivot = r;
    if (std::abs(m(pivot, c)) == 0.0) return 0.0;
    if (pivot != c) {
      m.row(pivot).swap(m.row(c));
      d = -d;
    }
    d *= m(c, c);
    for (int r = c + 1; r < n; ++r) {
      const std::complex<double> f = m(r, c) / m(c, c);
      m.row(r).tail(n - c) -= f * m.row(c).tail(n - c);
    }
  }
  return d;
}

inline std::complex<double> char_poly(const Eigen::MatrixXcd& a, std::complex<double> x) {
  Eigen::MatrixXcd m = -a;
  m.diagonal().array() += x;
  return det(m);
}

// Every claimed eigenvalue must be a root of det(xI - A), and the claimed
// list must account for trace and determinant (catches wrong multiplicities).
inline bool spectrum_matches(const Eigen::MatrixXcd& a, const Eigen::VectorXd& values,
                             double tol) {
  const int n = static_cast<int>(a.rows());
  const double scale = 1.0 + a.cwiseAbs().maxCoeff();
  double scale_pow = 1.0;
  for (int i = 0; i < n; ++i) scale_pow *= scale;
  for (int i = 0; i < values.size(); ++i)
    if (std::abs(char_poly(a, values[i])) > tol * scale_pow) return false;
  std::complex<double> tr = 0.0;
  for (int i = 0; i < n; ++i) tr += a(i, i);
  if (std::abs(tr - std::complex<double>(values.sum(), 0.0)) > tol * scale * n) return false;
  std::complex<double> prod = 1.0;
  for (int i = 0; i < values.size(); ++i) prod *= values[i];
  if (std::abs(det(a) - prod) > tol * scale_pow) return false;
  return true;
}

// Skew-symmetric analogue: block parameters mu give eigenvalues ±i*mu (plus a
// zero for odd n), so each ±i*mu must be a char-poly root and det(A) must be
// prod mu^2 (0 automatically when n is odd).
inline bool so_spectrum_matches(const Eigen::MatrixXcd& a, const Eigen::VectorXd& mu,
                                double tol) {
  const int n = static_cast<int>(a.rows());
  const double scale = 1.0 + a.cwiseAbs().maxCoeff();
  double scale_pow = 1.0;
  for (int i = 0; i < n; ++i) scale_pow *= scale;
  const std::complex<double> im(0.0, 1.0);
  for (int i = 0; i < mu.size(); ++i) {
    if (std::abs(char_poly(a, im * mu[i])) > tol * scale_pow) return false;
    if (std::abs(char_poly(a, -im * mu[i])) > tol * scale_pow) return false;
  }
  std::complex<double> expected = 1.0;
  if (n % 2 == 1) expected = 0.0;
  for (int i = 0; i < mu.size(); ++i) expected *= mu[i] * mu[i];
  if (std::abs(det(a) - expected) > tol * scale_pow) return false;
  return true;
}

// Eigenvalues of a 2x2 Hermitian matrix by the quadratic formula, descending.
inline Eigen::Vector2d herm2_eigs(const Eigen::Matrix2cd& a) {
  const double tr = a(0, 0).real() + a(1, 1).real();
  const double d = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)).real();
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * d));
  return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

// Unitary-pattern interlacing spelled out directly: up[i] >= low[i] >= up[i+1].
inline bool interlaces_u(const Eigen::VectorXd& low, const Eigen::VectorXd& up, double slack) {
  for (int i = 0; i < low.size(); ++i) {
    if (low[i] > up[i] + slack) return false;
    if (up[i + 1] > low[i] + slack) return false;
  }
  return true;
}

// Special-orthogonal block parameters: the even/odd cases differ in which
// trailing inequality closes the chain.
inline bool interlaces_so(int level_low, const Eigen::VectorXd& low, const Eigen::VectorXd& up,
                          double slack) {
  const int m = static_cast<int>(low.size());
  if (level_low % 2 == 0) {  // sizes equal: up_i >= low_i >= up_{i+1}, low_m >= 0
    for (int i = 0; i < m; ++i) {
      if (low[i] > up[i] + slack) return false;
      if (i + 1 < m && up[i + 1] > low[i] + slack) return false;
    }
    if (low[m - 1] < -slack) return false;
  } else {  // up one longer: up_i >= low_i >= up_{i+1}, up_{m+1} >= 0
    for (int i = 0; i < m; ++i) {
      if (low[i] > up[i] + slack) return false;
      if (up[i + 1] > low[i] + slack) return false;
    }
    if (up[m] < -slack) return false;
  }
  return true;
}

}  // namespace oracle
