#pragma once

#include <cstdint>
#include <vector>

#include "gz/pattern.hpp"

namespace gz {

// Torus parameters of the reconstruction: phases[k-1] holds the k border
// angles used when growing the (k+1)-by-(k+1) matrix, k = 1..n-1.
struct PhaseVector {
  std::vector<Eigen::VectorXd> phases;

  static PhaseVector zero(int n);
  static PhaseVector random(int n, std::uint64_t seed);
};

// One inductive step: wrap A_k into [[A_k, b],[b^H, c]] whose spectrum is
// `target`. c = sum(target) - trace(A_k); in the eigenbasis (mu_i, u_i) of A_k
// the border is b = sum_i beta_i e^{i phi_i} u_i with
//
//   beta_i^2 = - prod_j (mu_i - target_j) / prod_{j != i} (mu_i - mu_j),
//
// products taken over the active (non-deflated) indices. A coincidence
// |mu_i - target_j| below the tie tolerance deflates exactly: beta_i = 0 and
// the pair drops out of every product. Guarantee: sweep(result) = target to
// 1e-8 * scale.
MatrixPoint border_once(const MatrixPoint& A, const Eigen::VectorXd& target,
                        const Eigen::VectorXd& phases, const Tolerances& tol = {});

// Fold border_once over the rows of a full-chain Unitary pattern. Zero phases
// on a strict pattern give the canonical real symmetric representative.
MatrixPoint inverse_gz(const GZPattern& p, const PhaseVector& phases, const Tolerances& tol = {});
MatrixPoint inverse_gz(const GZPattern& p, const Tolerances& tol = {});  // zero phases

// count reconstructions of the same regular pattern with derived-seed random
// phases; element i uses seed stream (seed, i).
std::vector<MatrixPoint> sample_fibre(const GZPattern& p, int count, std::uint64_t seed,
                                      const Tolerances& tol = {});

}  // namespace gz
