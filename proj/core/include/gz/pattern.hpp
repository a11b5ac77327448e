#pragma once

#include <cstdint>
#include <vector>

#include "gz/inequality.hpp"
#include "gz/orbit.hpp"

namespace gz {

// Number of sweep coordinates at subalgebra level k.
inline int row_length(Group g, int k) { return chamber_length(g, k); }

// Increasing subalgebra sizes ending at n. Full chain: 1..n for Unitary,
// 2..n for SpecialOrthogonal (so(1) is trivial).
struct ChainSpec {
  Group group = Group::Unitary;
  int n = 0;
  std::vector<int> levels;

  static ChainSpec full(Group g, int n);
  bool is_full() const;
};

// Triangular array of sweep values of the nested leading principal blocks,
// stored bottom level first. rows[t] has row_length(group, levels[t]) entries,
// each row weakly decreasing.
struct GZPattern {
  Group group = Group::Unitary;
  std::vector<int> levels;
  std::vector<Eigen::VectorXd> rows;

  int n() const { return levels.empty() ? 0 : levels.back(); }
  const Eigen::VectorXd& top_row() const { return rows.back(); }
  bool full_chain() const;
  double max_norm() const;
  double scale() const { return 1.0 + max_norm(); }
};

void validate_chain(const ChainSpec& chain);
void validate_pattern_shape(const GZPattern& p);

// Forward map: row at level k = sweep of the leading k-by-k block.
GZPattern gz_map(const MatrixPoint& A, const Tolerances& tol = {});
GZPattern gz_map(const MatrixPoint& A, const ChainSpec& chain, const Tolerances& tol = {});

// Closed one-level-down interlacing on a full-chain pattern, slack
// slack * (1 + max-norm of p). Unitary rows: up[i] >= low[i] >= up[i+1].
// SpecialOrthogonal rows interlace the block parameters with the trailing
// nonnegativity inequality of each pair.
bool check_interlacing(const GZPattern& p, double slack = Tolerances{}.interlacing_slack);

// Strict pattern test: every interlacing inequality holds with margin
// > gap_tol and entries within each row are separated by > gap_tol.
bool is_regular(const GZPattern& p, double gap_tol);

// The interlacing cone of the consecutive pair (level k, level k+1) as
// homogeneous rows over (eta, xi) = (level-k values, level-(k+1) values),
// coefficients 0/±1, kappa = 0 throughout. Layout: (k,1..m_k),(k+1,1..m_{k+1}).
InequalitySystem branching_inequalities(Group g, int k);

// Uniform member of the interlacing cone over a fixed top row: each row is
// drawn coordinate-wise from the interval its upper neighbours allow. Useful
// as a cheap random-member sampler for image polytopes.
GZPattern sample_pattern(const OrbitSpec& spec, std::uint64_t seed);

// Pattern coordinates below the top row, level ascending then index: the
// variable order of image_polytope.
Eigen::VectorXd below_top_coordinates(const GZPattern& p);

// Inverse of the flattening: rebuild the full-chain pattern whose top row is
// the orbit spectrum and whose lower rows are x.
GZPattern pattern_from_coordinates(const OrbitSpec& spec, const Eigen::VectorXd& x);

}  // namespace gz
