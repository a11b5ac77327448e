#pragma once

namespace gz {

// Default numerical tolerances. Matrix- or pattern-adjacent checks are
// relative: the absolute bound is tol * (1 + max-norm of the guarded data).
struct Tolerances {
  double symmetry = 1e-12;          // Hermitian / skew-symmetric invariant
  double reconstruction = 1e-10;    // eigendecomposition round trip
  double equality = 1e-9;           // generic value comparison
  double regularity_gap = 1e-6;     // strictness margin for regular patterns
  double interlacing_slack = 1e-10; // closed interlacing inequalities
  double membership_slack = 1e-9;   // polytope membership
  double deflation_tie = 1e-9;      // eigenvalue/target coincidence in borders
  double radicand_clamp = 1e-8;     // negative-radicand forgiveness band
  double flow_gap = 1e-8;           // eigenvalue simplicity required by flows

  Tolerances scaled(double s) const {
    Tolerances t = *this;
    t.symmetry *= s;
    t.reconstruction *= s;
    t.equality *= s;
    t.regularity_gap *= s;
    t.interlacing_slack *= s;
    t.membership_slack *= s;
    t.deflation_tie *= s;
    t.radicand_clamp *= s;
    t.flow_gap *= s;
    return t;
  }
};

}  // namespace gz
