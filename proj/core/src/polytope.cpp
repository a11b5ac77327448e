#include "gz/polytope.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "gz/rng.hpp"

namespace gz {

namespace {

constexpr int kMaxVertexDim = 6;

void check_dim(const InequalitySystem& S, const Eigen::VectorXd& x) {
  if (x.size() != S.dim)
    fail(ErrorCode::DimMismatch, "point has " + std::to_string(x.size()) +
                                     " coordinates, system expects " +
                                     std::to_string(S.dim));
}

// Shared assembly for the pinned-top and free-top image systems. Variables
// are the pattern coordinates of `levels` in order; `top` (when present)
// substitutes the level after the last one as constants.
InequalitySystem assemble_chain_rows(Group g, const std::vector<int>& var_levels,
                                     const Eigen::VectorXd* top) {
  InequalitySystem S;
  std::vector<int> offset(var_levels.size());
  int dim = 0;
  for (std::size_t t = 0; t < var_levels.size(); ++t) {
    offset[t] = dim;
    const int len = row_length(g, var_levels[t]);
    for (int i = 0; i < len; ++i) S.layout.push_back({var_levels[t], i + 1});
    dim += len;
  }
  S.dim = dim;

  const std::size_t pairs = top ? var_levels.size() : var_levels.size() - 1;
  for (std::size_t t = 0; t < pairs; ++t) {
    const int k = var_levels[t];
    const int m_low = row_length(g, k);
    const bool top_pair = top && t + 1 == var_levels.size();
    const InequalitySystem branch = branching_inequalities(g, k);
    for (const Halfspace& row : branch.rows) {
      Halfspace out;
      out.a = Eigen::VectorXd::Zero(dim);
      out.kappa = row.kappa;
      for (int i = 0; i < m_low; ++i) out.a[offset[t] + i] = row.a[i];
      for (int i = m_low; i < row.a.size(); ++i) {
        const int j = i - m_low;
        if (top_pair)
          out.kappa -= row.a[i] * (*top)[j];
        else
          out.a[offset[t + 1] + j] = row.a[i];
      }
      if (out.a.cwiseAbs().maxCoeff() == 0.0) continue;  // constant row
      S.rows.push_back(std::move(out));
    }
  }
  return S;
}

std::vector<int> image_var_levels(const ChainSpec& chain, bool include_top) {
  std::vector<int> levels(chain.levels.begin(),
                          include_top ? chain.levels.end() : chain.levels.end() - 1);
  return levels;
}

double tight_scale(const std::vector<Eigen::VectorXd>& verts) {
  double m = 0.0;
  for (const auto& v : verts)
    if (v.size() > 0) m = std::max(m, v.cwiseAbs().maxCoeff());
  return 1.0 + m;
}

}  // namespace

bool membership(const InequalitySystem& S, const Eigen::VectorXd& x, double slack) {
  check_dim(S, x);
  const double bound = slack * (1.0 + (x.size() > 0 ? x.cwiseAbs().maxCoeff() : 0.0));
  for (const Halfspace& row : S.rows)
    if (row.a.dot(x) > row.kappa + bound) return false;
  return true;
}

InequalitySystem image_polytope(const OrbitSpec& spec) {
  return image_polytope(spec, ChainSpec::full(spec.group, spec.n));
}

InequalitySystem image_polytope(const OrbitSpec& spec, const ChainSpec& chain) {
  validate_orbit_spec(spec);
  validate_chain(chain);
  if (chain.group != spec.group || chain.n != spec.n)
    fail(ErrorCode::BadInput, "chain does not match the orbit it should project");
  for (std::size_t t = 1; t < chain.levels.size(); ++t)
    if (chain.levels[t] != chain.levels[t - 1] + 1)
      fail(ErrorCode::UnsupportedPair,
           "image polytope needs a contiguous chain; no branching rows exist "
           "across skipped levels");

  if (chain.levels.size() == 1) {  // top row only, no free coordinates
    InequalitySystem S;
    S.dim = 0;
    return S;
  }
  return assemble_chain_rows(spec.group, image_var_levels(chain, false),
                             &spec.spectrum.values);
}

InequalitySystem chain_image_system(Group g, int n) {
  const ChainSpec chain = ChainSpec::full(g, n);
  validate_chain(chain);
  return assemble_chain_rows(g, image_var_levels(chain, true), nullptr);
}

InequalitySystem cut(const InequalitySystem& S, const Eigen::VectorXd& a, double kappa) {
  if (a.size() != S.dim)
    fail(ErrorCode::DimMismatch, "cut row has " + std::to_string(a.size()) +
                                     " coefficients, system expects " +
                                     std::to_string(S.dim));
  InequalitySystem out = S;
  out.rows.push_back({a, kappa});
  return out;
}

std::vector<Eigen::VectorXd> vertices(const InequalitySystem& S) {
  if (S.dim > kMaxVertexDim)
    fail(ErrorCode::DimTooLarge, "vertex enumeration is limited to dimension " +
                                     std::to_string(kMaxVertexDim) + ", got " +
                                     std::to_string(S.dim));
  if (S.dim <= 0) return {};

  // Coordinate ray probe: a bounded system must stop every signed axis.
  for (int c = 0; c < S.dim; ++c)
    for (const double s : {1.0, -1.0}) {
      bool stopped = false;
      for (const Halfspace& row : S.rows)
        if (s * row.a[c] > 0.0) {
          stopped = true;
          break;
        }
      if (!stopped)
        fail(ErrorCode::Unbounded, "no row bounds coordinate " + std::to_string(c) +
                                       (s > 0 ? " from above" : " from below"));
    }

  const int d = S.dim;
  const int r = static_cast<int>(S.rows.size());
  std::vector<Eigen::VectorXd> found;
  if (r < d) return found;

  std::vector<int> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i;
  while (true) {
    Eigen::MatrixXd A(d, d);
    Eigen::VectorXd b(d);
    for (int i = 0; i < d; ++i) {
      A.row(i) = S.rows[pick[i]].a.transpose();
      b[i] = S.rows[pick[i]].kappa;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    if (lu.isInvertible()) {
      const Eigen::VectorXd x = lu.solve(b);
      if (membership(S, x)) {
        const double tol = 1e-8 * (1.0 + x.cwiseAbs().maxCoeff());
        bool fresh = true;
        for (const auto& v : found)
          if ((v - x).cwiseAbs().maxCoeff() <= tol) {
            fresh = false;
            break;
          }
        if (fresh) found.push_back(x);
      }
    }

    // next combination
    int i = d - 1;
    while (i >= 0 && pick[i] == r - d + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return found;
}

std::vector<std::pair<int, int>> polytope_edges(const InequalitySystem& S,
                                                const std::vector<Eigen::VectorXd>& verts) {
  std::vector<std::pair<int, int>> edges;
  const double tol = 1e-8 * tight_scale(verts);
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      std::vector<int> common;
      for (std::size_t rr = 0; rr < S.rows.size(); ++rr) {
        const Halfspace& row = S.rows[rr];
        if (std::abs(row.a.dot(verts[i]) - row.kappa) <= tol &&
            std::abs(row.a.dot(verts[j]) - row.kappa) <= tol)
          common.push_back(static_cast<int>(rr));
      }
      int rank = 0;
      if (!common.empty()) {
        Eigen::MatrixXd A(common.size(), S.dim);
        for (std::size_t rr = 0; rr < common.size(); ++rr)
          A.row(rr) = S.rows[common[rr]].a.transpose();
        rank = static_cast<int>(Eigen::FullPivLU<Eigen::MatrixXd>(A).rank());
      }
      if (rank != S.dim - 1) continue;
      if (membership(S, 0.5 * (verts[i] + verts[j])))
        edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  return edges;
}

double width_lower_bound(const ChamberPoint& spectrum) {
  double gap = 0.0;
  for (int i = 0; i < spectrum.values.size(); ++i)
    for (int j = i + 1; j < spectrum.values.size(); ++j) {
      const double d = std::abs(spectrum.values[i] - spectrum.values[j]);
      if (d > 0.0 && (gap == 0.0 || d < gap)) gap = d;
    }
  return 2.0 * M_PI * gap;
}

bool certify_simplex(const InequalitySystem& S, const SimplexCertificate& cert,
                     double slack) {
  check_dim(S, cert.anchor);
  std::vector<Eigen::VectorXd> dirs = cert.directions;
  if (dirs.empty())
    for (int c = 0; c < S.dim; ++c)
      dirs.push_back(Eigen::VectorXd::Unit(S.dim, c));
  if (static_cast<int>(dirs.size()) != S.dim)
    fail(ErrorCode::DimMismatch, "certificate needs one direction per coordinate");

  if (!membership(S, cert.anchor, slack)) return false;
  for (const auto& dvec : dirs) {
    if (dvec.size() != S.dim)
      fail(ErrorCode::DimMismatch, "direction length does not match the system");
    if (!membership(S, cert.anchor + cert.width * dvec, slack)) return false;
  }
  return true;
}

std::optional<SimplexCertificate> find_axis_simplex(const InequalitySystem& S, double width,
                                                    double slack) {
  const auto verts = vertices(S);
  if (verts.empty()) return std::nullopt;
  const auto [lo, hi] = bounding_box(verts);

  // Candidate anchor coordinates per axis: vertex values, midpoints of
  // consecutive vertex values, and the width-shifted box endpoints.
  std::vector<std::vector<double>> cand(S.dim);
  for (int c = 0; c < S.dim; ++c) {
    std::set<double> vals;
    for (const auto& v : verts) vals.insert(v[c]);
    std::vector<double> sorted(vals.begin(), vals.end());
    std::vector<double>& out = cand[c];
    out = sorted;
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      out.push_back(0.5 * (sorted[i] + sorted[i + 1]));
    out.push_back(lo[c] + width);
    out.push_back(hi[c] - width);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    out.erase(std::remove_if(out.begin(), out.end(),
                             [&](double x) { return x < lo[c] || x > hi[c]; }),
              out.end());
    if (out.empty()) return std::nullopt;
  }

  SimplexCertificate cert;
  cert.width = width;
  cert.anchor = Eigen::VectorXd::Zero(S.dim);
  std::vector<std::size_t> at(S.dim, 0);
  while (true) {
    for (int c = 0; c < S.dim; ++c) cert.anchor[c] = cand[c][at[c]];
    for (unsigned mask = 0; mask < (1u << S.dim); ++mask) {
      cert.directions.clear();
      for (int c = 0; c < S.dim; ++c) {
        const double s = (mask >> c) & 1u ? -1.0 : 1.0;
        cert.directions.push_back(s * Eigen::VectorXd::Unit(S.dim, c));
      }
      if (certify_simplex(S, cert, slack)) return cert;
    }

    int c = S.dim - 1;
    while (c >= 0 && at[c] + 1 == cand[c].size()) at[c--] = 0;
    if (c < 0) break;
    ++at[c];
  }
  return std::nullopt;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> bounding_box(
    const std::vector<Eigen::VectorXd>& verts) {
  if (verts.empty()) fail(ErrorCode::BadInput, "bounding box of an empty vertex list");
  Eigen::VectorXd lo = verts[0];
  Eigen::VectorXd hi = verts[0];
  for (const auto& v : verts) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  return {lo, hi};
}

Eigen::VectorXd sample_member(const InequalitySystem& S, const Eigen::VectorXd& lo,
                              const Eigen::VectorXd& hi, std::uint64_t seed,
                              int max_draws) {
  check_dim(S, lo);
  check_dim(S, hi);
  Rng rng(seed);
  Eigen::VectorXd x(S.dim);
  for (int draw = 0; draw < max_draws; ++draw) {
    for (int c = 0; c < S.dim; ++c) x[c] = rng.uniform(lo[c], hi[c]);
    if (membership(S, x)) return x;
  }
  fail(ErrorCode::EmptyModuli, "no member found in " + std::to_string(max_draws) +
                                   " box draws; the region is empty or thin");
}

InequalitySystem su2_trapezoid_system(double a, double b) {
  InequalitySystem S;
  S.dim = 2;
  S.rows.push_back({Eigen::Vector2d(0.0, 1.0), b});    // y <= b
  S.rows.push_back({Eigen::Vector2d(0.0, -1.0), -a});  // a <= y
  S.rows.push_back({Eigen::Vector2d(1.0, -1.0), 0.0});   // x <= y
  S.rows.push_back({Eigen::Vector2d(-1.0, -1.0), 0.0});  // -y <= x
  return S;
}

InequalitySystem u2_cut_momentum_set(double k) {
  InequalitySystem S;
  S.dim = 2;
  S.layout = {{2, 1}, {2, 2}};
  S.rows.push_back({Eigen::Vector2d(-1.0, 0.0), 0.0});  // 0 <= x1
  S.rows.push_back({Eigen::Vector2d(0.0, 1.0), 0.0});   // x2 <= 0
  S.rows.push_back({Eigen::Vector2d(0.0, -1.0), k});    // -k <= x2
  return S;
}

InequalitySystem u2_cut_image(double k) {
  InequalitySystem S = chain_image_system(Group::Unitary, 2);
  Eigen::VectorXd a = Eigen::VectorXd::Zero(3);
  a[1] = -1.0;
  S = cut(S, a, 0.0);  // 0 <= x21
  a.setZero();
  a[2] = 1.0;
  S = cut(S, a, 0.0);  // x22 <= 0
  a.setZero();
  a[2] = -1.0;
  S = cut(S, a, k);  // -k <= x22
  return S;
}

}  // namespace gz
