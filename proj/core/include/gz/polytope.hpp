#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gz/inequality.hpp"
#include "gz/pattern.hpp"

namespace gz {

// true iff a.x <= kappa + slack * (1 + ||x||_inf) for every row.
bool membership(const InequalitySystem& S, const Eigen::VectorXd& x,
                double slack = Tolerances{}.membership_slack);

// The image polytope of a full-chain orbit system: variables are all pattern
// coordinates below the top row (level ascending, then index), rows are the
// consecutive branching inequalities with the top row substituted as
// constants. Constant-only rows (which a valid spectrum satisfies trivially)
// are dropped.
InequalitySystem image_polytope(const OrbitSpec& spec);
InequalitySystem image_polytope(const OrbitSpec& spec, const ChainSpec& chain);

// Branching rows of the full chain with a free top row: variables are all
// pattern coordinates including level n. Momentum-set rows are up to the
// caller (append with cut).
InequalitySystem chain_image_system(Group g, int n);

// S plus one appended halfspace row.
InequalitySystem cut(const InequalitySystem& S, const Eigen::VectorXd& a, double kappa);

// All basic feasible points by brute force over dim-subsets of rows.
// dim <= 6; boundedness is checked with coordinate ray probes.
std::vector<Eigen::VectorXd> vertices(const InequalitySystem& S);

// Vertex index pairs that span an edge (their common tight rows have rank
// dim-1 and the midpoint is a member). For plot emission.
std::vector<std::pair<int, int>> polytope_edges(const InequalitySystem& S,
                                                const std::vector<Eigen::VectorXd>& verts);

// 2*pi times the smallest positive pairwise spectral difference; 0 for scalar
// spectra. The 2*pi is the weight-lattice normalization (lattice = (1/2pi) *
// standard lattice in pattern coordinates).
double width_lower_bound(const ChamberPoint& spectrum);

struct SimplexCertificate {
  Eigen::VectorXd anchor;
  double width = 0.0;
  std::vector<Eigen::VectorXd> directions;  // dim vectors; default signed axes
};

// true iff anchor and every anchor + width * direction pass membership with
// the given slack. A passing certificate makes 2*pi*width a certified width
// lower bound under the lattice convention above.
bool certify_simplex(const InequalitySystem& S, const SimplexCertificate& cert,
                     double slack = 1e-9);

// Grid search for a passing certificate with signed-axis directions: anchor
// coordinates are drawn from vertex coordinates, their midpoints, and
// width-shifted endpoints; all 2^dim sign patterns are tried.
std::optional<SimplexCertificate> find_axis_simplex(const InequalitySystem& S, double width,
                                                    double slack = 1e-9);

// Componentwise [lo, hi] over a vertex list.
std::pair<Eigen::VectorXd, Eigen::VectorXd> bounding_box(const std::vector<Eigen::VectorXd>& verts);

// Rejection sampler from a box; throws EMPTY_MODULI after max_draws misses.
Eigen::VectorXd sample_member(const InequalitySystem& S, const Eigen::VectorXd& lo,
                              const Eigen::VectorXd& hi, std::uint64_t seed,
                              int max_draws = 100000);

// Small fixed systems used by the CLI fixtures and tests: the two-coordinate
// trapezoid {a <= y <= b, -y <= x <= y} over (x, y), the cut momentum set
// {0 <= x1, -k <= x2 <= 0} over the level-2 chamber, and the free-top
// u(1) ⊆ u(2) image {x2 <= x0 <= x1, 0 <= x1, -k <= x2 <= 0}.
InequalitySystem su2_trapezoid_system(double a, double b);
InequalitySystem u2_cut_momentum_set(double k);
InequalitySystem u2_cut_image(double k);

}  // namespace gz
