#include "gz/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gz/rng.hpp"

namespace gz {

namespace {

int first_level(Group g) { return g == Group::Unitary ? 1 : 2; }

// Closed pairwise inequalities between consecutive rows, slack in absolute
// units. up = row at level k+1, low = row at level k.
bool pair_interlaces(Group g, int k, const Eigen::VectorXd& low,
                     const Eigen::VectorXd& up, double slack) {
  if (g == Group::Unitary) {
    for (int i = 0; i < low.size(); ++i) {
      if (low[i] > up[i] + slack) return false;
      if (up[i + 1] > low[i] + slack) return false;
    }
    return true;
  }
  const int m = static_cast<int>(low.size());
  for (int i = 0; i < m; ++i)
    if (low[i] > up[i] + slack) return false;
  if (k % 2 == 0) {  // levels k=2m, k+1=2m+1: both rows have m entries
    for (int i = 0; i + 1 < m; ++i)
      if (up[i + 1] > low[i] + slack) return false;
    if (low[m - 1] < -slack) return false;
  } else {  // k=2m+1, k+1=2m+2: upper row has one more entry
    for (int i = 0; i < m; ++i)
      if (up[i + 1] > low[i] + slack) return false;
    if (up[m] < -slack) return false;
  }
  return true;
}

// Margin of the same inequality set: min over rows of (upper bound - value).
double pair_margin(Group g, int k, const Eigen::VectorXd& low,
                   const Eigen::VectorXd& up) {
  double margin = std::numeric_limits<double>::infinity();
  if (g == Group::Unitary) {
    for (int i = 0; i < low.size(); ++i) {
      margin = std::min(margin, up[i] - low[i]);
      margin = std::min(margin, low[i] - up[i + 1]);
    }
    return margin;
  }
  const int m = static_cast<int>(low.size());
  for (int i = 0; i < m; ++i) margin = std::min(margin, up[i] - low[i]);
  if (k % 2 == 0) {
    for (int i = 0; i + 1 < m; ++i) margin = std::min(margin, low[i] - up[i + 1]);
    margin = std::min(margin, low[m - 1]);
  } else {
    for (int i = 0; i < m; ++i) margin = std::min(margin, low[i] - up[i + 1]);
    margin = std::min(margin, up[m]);
  }
  return margin;
}

void require_full_chain(const GZPattern& p, const char* what) {
  if (!p.full_chain())
    fail(ErrorCode::UnsupportedPair,
         std::string(what) + " is defined for full-chain patterns only");
}

}  // namespace

ChainSpec ChainSpec::full(Group g, int n) {
  ChainSpec chain{g, n, {}};
  for (int k = first_level(g); k <= n; ++k) chain.levels.push_back(k);
  return chain;
}

bool ChainSpec::is_full() const {
  const int lo = first_level(group);
  if (n < lo || levels.empty()) return false;
  if (static_cast<int>(levels.size()) != n - lo + 1) return false;
  for (std::size_t t = 0; t < levels.size(); ++t)
    if (levels[t] != lo + static_cast<int>(t)) return false;
  return true;
}

void validate_chain(const ChainSpec& chain) {
  const int lo = first_level(chain.group);
  if (chain.n < lo)
    fail(ErrorCode::BadInput, "chain size must be at least " + std::to_string(lo));
  if (chain.levels.empty()) fail(ErrorCode::BadInput, "chain has no levels");
  for (std::size_t t = 0; t < chain.levels.size(); ++t) {
    if (chain.levels[t] < lo)
      fail(ErrorCode::BadInput,
           "chain level " + std::to_string(chain.levels[t]) + " below minimum " +
               std::to_string(lo));
    if (t > 0 && chain.levels[t] <= chain.levels[t - 1])
      fail(ErrorCode::BadInput, "chain levels must be strictly increasing");
  }
  if (chain.levels.back() != chain.n)
    fail(ErrorCode::BadInput, "chain must end at the full level n");
}

void validate_pattern_shape(const GZPattern& p) {
  if (p.levels.empty()) fail(ErrorCode::ShapeMismatch, "pattern has no rows");
  if (p.rows.size() != p.levels.size())
    fail(ErrorCode::ShapeMismatch, "pattern has " + std::to_string(p.rows.size()) +
                                       " rows for " + std::to_string(p.levels.size()) +
                                       " levels");
  ChainSpec chain{p.group, p.levels.back(), p.levels};
  validate_chain(chain);
  for (std::size_t t = 0; t < p.rows.size(); ++t) {
    const int want = row_length(p.group, p.levels[t]);
    if (p.rows[t].size() != want)
      fail(ErrorCode::ShapeMismatch,
           "row at level " + std::to_string(p.levels[t]) + " has " +
               std::to_string(p.rows[t].size()) + " entries, expected " +
               std::to_string(want));
  }
}

bool GZPattern::full_chain() const {
  if (levels.empty()) return false;
  const int lo = first_level(group);
  if (levels.front() != lo) return false;
  for (std::size_t t = 1; t < levels.size(); ++t)
    if (levels[t] != levels[t - 1] + 1) return false;
  return true;
}

double GZPattern::max_norm() const {
  double m = 0.0;
  for (const auto& row : rows)
    if (row.size() > 0) m = std::max(m, row.cwiseAbs().maxCoeff());
  return m;
}

GZPattern gz_map(const MatrixPoint& A, const Tolerances& tol) {
  return gz_map(A, ChainSpec::full(A.group, A.n()), tol);
}

GZPattern gz_map(const MatrixPoint& A, const ChainSpec& chain, const Tolerances& tol) {
  validate_matrix_point(A, tol);
  if (chain.group != A.group)
    fail(ErrorCode::BadInput, "chain group does not match the matrix point");
  if (chain.n != A.n())
    fail(ErrorCode::ShapeMismatch, "chain size " + std::to_string(chain.n) +
                                       " does not match matrix size " +
                                       std::to_string(A.n()));
  validate_chain(chain);

  GZPattern p;
  p.group = A.group;
  p.levels = chain.levels;
  p.rows.reserve(chain.levels.size());
  for (int k : chain.levels)
    p.rows.push_back(sweep(leading_block(A, k), tol).values);
  return p;
}

bool check_interlacing(const GZPattern& p, double slack) {
  validate_pattern_shape(p);
  require_full_chain(p, "interlacing check");
  const double abs_slack = slack * p.scale();
  for (std::size_t t = 0; t + 1 < p.rows.size(); ++t)
    if (!pair_interlaces(p.group, p.levels[t], p.rows[t], p.rows[t + 1], abs_slack))
      return false;
  return true;
}

bool is_regular(const GZPattern& p, double gap_tol) {
  validate_pattern_shape(p);
  require_full_chain(p, "regularity check");
  for (std::size_t t = 0; t + 1 < p.rows.size(); ++t)
    if (pair_margin(p.group, p.levels[t], p.rows[t], p.rows[t + 1]) <= gap_tol)
      return false;
  for (const auto& row : p.rows)
    for (int i = 0; i + 1 < row.size(); ++i)
      if (row[i] - row[i + 1] <= gap_tol) return false;
  return true;
}

InequalitySystem branching_inequalities(Group g, int k) {
  if (k < first_level(g))
    fail(ErrorCode::UnsupportedPair,
         "no branching pair starts at level " + std::to_string(k) + " for group " +
             group_tag(g));

  const int m_low = row_length(g, k);
  const int m_up = row_length(g, k + 1);
  InequalitySystem sys;
  sys.dim = m_low + m_up;
  for (int i = 0; i < m_low; ++i) sys.layout.push_back({k, i + 1});
  for (int i = 0; i < m_up; ++i) sys.layout.push_back({k + 1, i + 1});

  auto row = [&](std::initializer_list<std::pair<int, double>> terms) {
    Halfspace h;
    h.a = Eigen::VectorXd::Zero(sys.dim);
    h.kappa = 0.0;
    for (const auto& [idx, coef] : terms) h.a[idx] = coef;
    sys.rows.push_back(std::move(h));
  };
  const auto eta = [&](int i) { return i; };          // level-k coordinate i
  const auto xi = [&](int i) { return m_low + i; };   // level-(k+1) coordinate i

  if (g == Group::Unitary) {
    for (int i = 0; i < k; ++i) {
      row({{eta(i), 1.0}, {xi(i), -1.0}});      // eta_i <= xi_i
      row({{xi(i + 1), 1.0}, {eta(i), -1.0}});  // xi_{i+1} <= eta_i
    }
    return sys;
  }

  const int m = m_low;
  for (int i = 0; i < m; ++i) row({{eta(i), 1.0}, {xi(i), -1.0}});
  if (k % 2 == 0) {
    for (int i = 0; i + 1 < m; ++i) row({{xi(i + 1), 1.0}, {eta(i), -1.0}});
    row({{eta(m - 1), -1.0}});  // trailing nonnegativity of the lower row
  } else {
    for (int i = 0; i < m; ++i) row({{xi(i + 1), 1.0}, {eta(i), -1.0}});
    row({{xi(m_up - 1), -1.0}});  // trailing nonnegativity of the upper row
  }
  return sys;
}

GZPattern sample_pattern(const OrbitSpec& spec, std::uint64_t seed) {
  validate_orbit_spec(spec);
  const int lo = first_level(spec.group);
  if (spec.n < lo)
    fail(ErrorCode::BadInput, "orbit size too small for a pattern");

  Rng rng(seed);
  std::vector<Eigen::VectorXd> rows_top_down;
  rows_top_down.push_back(spec.spectrum.values);

  for (int k = spec.n - 1; k >= lo; --k) {
    const Eigen::VectorXd& up = rows_top_down.back();
    const int m = row_length(spec.group, k);
    Eigen::VectorXd low(m);
    if (spec.group == Group::Unitary) {
      for (int i = 0; i < m; ++i) low[i] = rng.uniform(up[i + 1], up[i]);
    } else if (k % 2 == 0) {  // up has m entries as well
      for (int i = 0; i + 1 < m; ++i) low[i] = rng.uniform(up[i + 1], up[i]);
      low[m - 1] = rng.uniform(0.0, up[m - 1]);
    } else {  // up has m + 1 entries
      for (int i = 0; i < m; ++i) low[i] = rng.uniform(up[i + 1], up[i]);
    }
    rows_top_down.push_back(low);
  }

  GZPattern p;
  p.group = spec.group;
  for (int k = lo; k <= spec.n; ++k) p.levels.push_back(k);
  p.rows.assign(rows_top_down.rbegin(), rows_top_down.rend());
  return p;
}

Eigen::VectorXd below_top_coordinates(const GZPattern& p) {
  long total = 0;
  for (std::size_t t = 0; t + 1 < p.rows.size(); ++t) total += p.rows[t].size();
  Eigen::VectorXd x(total);
  long at = 0;
  for (std::size_t t = 0; t + 1 < p.rows.size(); ++t) {
    x.segment(at, p.rows[t].size()) = p.rows[t];
    at += p.rows[t].size();
  }
  return x;
}

GZPattern pattern_from_coordinates(const OrbitSpec& spec, const Eigen::VectorXd& x) {
  validate_orbit_spec(spec);
  GZPattern p;
  p.group = spec.group;
  long at = 0;
  for (int k = first_level(spec.group); k <= spec.n; ++k) {
    p.levels.push_back(k);
    if (k == spec.n) {
      p.rows.push_back(spec.spectrum.values);
      break;
    }
    const int m = row_length(spec.group, k);
    if (at + m > x.size())
      fail(ErrorCode::DimMismatch, "coordinate vector too short for the chain");
    p.rows.push_back(x.segment(at, m));
    at += m;
  }
  if (at != x.size())
    fail(ErrorCode::DimMismatch, "coordinate vector has " + std::to_string(x.size()) +
                                     " entries, chain uses " + std::to_string(at));
  return p;
}

}  // namespace gz
