#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "gz/inequality.hpp"

namespace gz {

// Closed n-gon in R^3 with pinned edge lengths. edges[k-1] is the k-th edge
// vector; closure sum(edges) = 0 and ||edges[k-1]|| = lengths[k-1], both to
// 1e-9 * (1 + max length).
struct PolygonConfig {
  Eigen::VectorXd lengths;
  std::vector<Eigen::Vector3d> edges;

  int n() const { return static_cast<int>(edges.size()); }
};

// Diagonal (i, j), 1-based, is the chord spanned by the edge run i..j; its
// vector is edges_i + ... + edges_j. A run is a proper diagonal when
// 2 <= j - i + 1 <= n - 2. Non-crossing n-3 of them triangulate the n-gon.
struct TriangulationSpec {
  std::vector<std::pair<int, int>> diagonals;

  // Fan at the polygon's base vertex: runs (1,2), (1,3), ..., (1, n-2).
  static TriangulationSpec fan(int n);
};

void validate_polygon(const PolygonConfig& P);

// Throws INVALID_TRIANGULATION unless the chords triangulate the n-gon.
void validate_triangulation(int n, const TriangulationSpec& T);

// Triangles of the triangulation; each side is an edge run (i, j) that is
// either a polygon edge (i == j ... run of length 1 meaning edge i, or the
// closing edge) or one of the diagonals. Sides are reported as vertex pairs
// (p, q), 0-based polygon vertices, p < q.
std::vector<std::array<std::pair<int, int>, 3>> triangulation_triangles(int n,
                                                                        const TriangulationSpec& T);

Eigen::VectorXd diagonal_lengths(const PolygonConfig& P, const TriangulationSpec& T);

// Rotates edges i..j about the chord axis by angle; everything else is
// untouched. Closure, edge lengths, and every diagonal of a triangulation
// containing (i, j) are preserved. DEGENERATE_DIAGONAL when the chord is
// shorter than 1e-8.
PolygonConfig bend(const PolygonConfig& P, std::pair<int, int> diagonal, double angle);

// Triangle inequalities of every triangle of T, over the diagonal lengths as
// variables (layout entry = the (i, j) run), plus nonnegativity rows.
// Duplicate rows are emitted once.
InequalitySystem polygon_polytope(const Eigen::VectorXd& lengths, const TriangulationSpec& T);

// Rejection-samples diagonal lengths from the triangle-inequality polytope,
// builds the positively-oriented planar polygon realizing them, then applies
// seeded random bends about every diagonal. Deterministic per seed; throws
// EMPTY_MODULI after 1e5 rejected draws.
PolygonConfig sample_polygon(const Eigen::VectorXd& lengths, const TriangulationSpec& T,
                             std::uint64_t seed);

// Gauge fix: rotate so edge 1 lies along +x and edge 2 in the xy-plane with
// nonnegative y. Comparisons of configs modulo rotation use this.
PolygonConfig canonicalize(const PolygonConfig& P);

}  // namespace gz
