#pragma once

#include <Eigen/Dense>

#include <cstdint>

#include "gz/errors.hpp"
#include "gz/tolerances.hpp"

// Matrix models of the coadjoint picture.
//
// A point of u(n)* is identified with an n-by-n Hermitian matrix A, a point of
// so(n)* with an n-by-n real skew-symmetric matrix. Conjugation by the group
// moves A around its orbit; the "sweep" of A is the chamber representative of
// that orbit:
//
//   unitary:            eigenvalues of A, sorted descending;
//   special orthogonal: block parameters mu_1 >= ... >= mu_m >= 0 of the
//                       normal form  Q^T A Q = blockdiag(B(mu_1), ..., B(mu_m)[, 0]),
//                       B(mu) = [[0, mu], [-mu, 0]],  m = floor(n/2).
//
// The all-nonnegative convention for so(n)* merges the two chamber components
// that exist for even n; signed last coordinates are out of scope throughout.

namespace gz {

enum class Group { Unitary, SpecialOrthogonal };

inline const char* group_tag(Group g) { return g == Group::Unitary ? "u" : "so"; }

// Length of a chamber vector for the given group and matrix size.
inline int chamber_length(Group g, int n) { return g == Group::Unitary ? n : n / 2; }

struct MatrixPoint {
  Group group = Group::Unitary;
  Eigen::MatrixXcd entries;

  int n() const { return static_cast<int>(entries.rows()); }
  double max_norm() const { return entries.size() == 0 ? 0.0 : entries.cwiseAbs().maxCoeff(); }
  double scale() const { return 1.0 + max_norm(); }
};

// Weakly decreasing chamber coordinates; for SpecialOrthogonal additionally
// all entries >= 0.
struct ChamberPoint {
  Eigen::VectorXd values;
};

struct OrbitSpec {
  Group group = Group::Unitary;
  int n = 0;
  ChamberPoint spectrum;
};

struct SpectralDecomposition {
  Eigen::VectorXd values;  // descending; block parameters for SpecialOrthogonal
  Eigen::MatrixXcd frame;  // unitary columns; real orthogonal for SpecialOrthogonal
};

// Throws NON_SYMMETRIC / SHAPE_MISMATCH when A violates its group's matrix
// invariant beyond tol.symmetry * scale.
void validate_matrix_point(const MatrixPoint& A, const Tolerances& tol = {});

// Throws BAD_INPUT / SHAPE_MISMATCH for non-chamber spectra.
void validate_orbit_spec(const OrbitSpec& spec);

// The leading k-by-k principal block, same group tag.
MatrixPoint leading_block(const MatrixPoint& A, int k);

// Normal form assembled from chamber values: diag for Unitary, 2x2 blocks for
// SpecialOrthogonal (trailing zero row/column when n is odd).
Eigen::MatrixXcd normal_form(Group g, int n, const Eigen::VectorXd& values);

// Reconstruction contract: frame * normal_form(values) * frame^H = A to
// tol.reconstruction * scale. Column phases are canonicalized (largest entry
// real positive) so repeated runs agree bitwise.
SpectralDecomposition spectral_decomposition(const MatrixPoint& A, const Tolerances& tol = {});

ChamberPoint sweep(const MatrixPoint& A, const Tolerances& tol = {});

// Deterministic orbit point: Q * normal_form(spectrum) * Q^H with Q the
// orthonormalized seeded Gaussian matrix. Identical seeds give identical bytes.
MatrixPoint sample_orbit(const OrbitSpec& spec, std::uint64_t seed);

// Haar-ish random group element used by conjugation-invariance checks.
Eigen::MatrixXcd random_unitary(int n, std::uint64_t seed);
Eigen::MatrixXd random_special_orthogonal(int n, std::uint64_t seed);

// Gaussian Hermitian / skew-symmetric point (not confined to an orbit).
MatrixPoint random_matrix_point(Group g, int n, std::uint64_t seed);

}  // namespace gz
