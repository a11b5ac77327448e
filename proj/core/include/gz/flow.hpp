#pragma once

#include <optional>

#include "gz/pattern.hpp"

namespace gz {

// One circle flow of the action torus: conjugation by exp(i*angle*P ⊕ 0)
// where P is the rank-1 spectral projector of the leading level-by-level
// block onto its index-th eigenvalue (descending order, 1-based).
struct FlowSpec {
  int level = 1;
  int index = 1;
  double angle = 0.0;
};

// Applies one flow. The selected eigenvalue must be simple with gap
// > tol.flow_gap * scale, else DEGENERATE_LEVEL. The leading block commutes
// with its own projector, so every level <= f.level is untouched entrywise
// and the whole pattern is preserved.
MatrixPoint gz_flow(const MatrixPoint& A, const FlowSpec& f, const Tolerances& tol = {});

// max-norm discrepancy of the two application orders; <= 1e-6 * scale at
// regular points.
double verify_commutation(const MatrixPoint& A, const FlowSpec& f, const FlowSpec& g,
                          const Tolerances& tol = {});

// Search outcome for connect_by_flows.
struct FlowSearchResult {
  bool found = false;
  double distance = 0.0;            // max-norm gap after the best composite flow
  std::vector<FlowSpec> angles;     // one entry per torus direction
  int evaluations = 0;
};

// Heuristic witness that the torus acts transitively on a regular fibre:
// coarse grid plus coordinate refinement over all (level, index) angles with
// level < n, minimizing ||composite_flow(A) - B||_max. Succeeds when the best
// distance drops below target (absolute).
FlowSearchResult connect_by_flows(const MatrixPoint& A, const MatrixPoint& B, double target,
                                  int grid = 8, int refine_rounds = 60,
                                  const Tolerances& tol = {});

}  // namespace gz
