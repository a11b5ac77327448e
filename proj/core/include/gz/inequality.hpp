#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace gz {

// One affine halfspace a.x <= kappa.
struct Halfspace {
  Eigen::VectorXd a;
  double kappa = 0.0;
};

// Finite list of halfspaces over named coordinates. layout[c] = (level, index)
// says which pattern coordinate (or diagonal, for polygon systems) the c-th
// variable is; it is bookkeeping only and does not affect membership.
struct InequalitySystem {
  int dim = 0;
  std::vector<Halfspace> rows;
  std::vector<std::pair<int, int>> layout;
};

}  // namespace gz
