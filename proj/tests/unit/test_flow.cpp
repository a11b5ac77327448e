#include "gz/flow.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "gz/inverse.hpp"
#include "gz/rng.hpp"

using namespace gz;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<int>(xs.size()));
  int i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

OrbitSpec uspec(std::initializer_list<double> values) {
  OrbitSpec spec;
  spec.group = Group::Unitary;
  spec.spectrum.values = vec(values);
  spec.n = static_cast<int>(spec.spectrum.values.size());
  return spec;
}

double pattern_distance(const GZPattern& a, const GZPattern& b) {
  double d = 0.0;
  for (std::size_t t = 0; t < a.rows.size(); ++t)
    d = std::max(d, (a.rows[t] - b.rows[t]).cwiseAbs().maxCoeff());
  return d;
}

}  // namespace

TEST_CASE("zero angle is the identity, bitwise") {
  const auto A = sample_orbit(uspec({4.0, 2.0, 0.0}), 11);
  const auto B = gz_flow(A, {2, 1, 0.0});
  CHECK(A.entries == B.entries);
}

TEST_CASE("a full turn returns to the start") {
  const auto A = sample_orbit(uspec({4.0, 2.0, 0.0}), 12);
  for (const FlowSpec f : {FlowSpec{1, 1, 2.0 * M_PI}, FlowSpec{2, 2, 2.0 * M_PI}}) {
    const auto B = gz_flow(A, f);
    CHECK((A.entries - B.entries).cwiseAbs().maxCoeff() <= 1e-9 * A.scale());
  }
}

TEST_CASE("flows preserve the whole pattern and the orbit") {
  for (int t = 0; t < 25; ++t) {
    const auto A = sample_orbit(uspec({4.0, 2.0, 0.0}), derive_seed(500, t));
    const auto p = gz_map(A);
    const auto B = gz_flow(A, {2, 1, 0.7});
    validate_matrix_point(B);
    CHECK(pattern_distance(p, gz_map(B)) <= 1e-8 * A.scale());
    // levels at and below the flow level barely move entrywise
    CHECK((A.entries.topLeftCorner(2, 2) - B.entries.topLeftCorner(2, 2))
              .cwiseAbs()
              .maxCoeff() <= 1e-12 * A.scale());
    // something must actually happen at the bordering level
    CHECK((A.entries - B.entries).cwiseAbs().maxCoeff() > 1e-6);
  }
}

TEST_CASE("angles compose additively along one torus direction") {
  const auto A = sample_orbit(uspec({5.0, 2.5, 1.0, -1.0}), 77);
  const auto one = gz_flow(gz_flow(A, {2, 1, 0.4}), {2, 1, 0.9});
  const auto two = gz_flow(A, {2, 1, 1.3});
  CHECK((one.entries - two.entries).cwiseAbs().maxCoeff() <= 1e-9 * A.scale());
}

TEST_CASE("commutation discrepancy vanishes for equal flows and stays tiny for regular points") {
  const auto A = sample_orbit(uspec({5.0, 2.5, 1.0, -1.0}), 78);
  CHECK(verify_commutation(A, {2, 1, 0.3}, {2, 1, 0.3}) == 0.0);
  CHECK(verify_commutation(A, {2, 1, 0.3}, {3, 2, 1.1}) <= 1e-6 * A.scale());

  int checked = 0;
  for (int t = 0; t < 20 && checked < 12; ++t) {
    const auto X = sample_orbit(uspec({6.0, 4.0, 2.0, 0.0}), derive_seed(600, t));
    if (!is_regular(gz_map(X), 1e-6 * X.scale())) continue;
    Rng rng(derive_seed(601, t));
    const FlowSpec f{1 + static_cast<int>(rng.next_u64() % 3),
                     1, rng.uniform(0.0, 2.0 * M_PI)};
    const FlowSpec g{1 + static_cast<int>(rng.next_u64() % 3),
                     1, rng.uniform(0.0, 2.0 * M_PI)};
    CHECK(verify_commutation(X, f, g) <= 1e-6 * X.scale());
    ++checked;
  }
  CHECK(checked == 12);
}

TEST_CASE("a flow at the top level acts trivially") {
  const auto A = sample_orbit(uspec({4.0, 2.0, 0.0}), 79);
  const auto B = gz_flow(A, {3, 2, 1.234});
  CHECK((A.entries - B.entries).cwiseAbs().maxCoeff() <= 1e-12 * A.scale());
}

TEST_CASE("degenerate leading blocks are rejected") {
  MatrixPoint A;
  A.group = Group::Unitary;
  A.entries = Eigen::MatrixXcd::Zero(3, 3);
  A.entries(0, 0) = 2.0;
  A.entries(1, 1) = 2.0;
  A.entries(2, 2) = 1.0;
  CHECK_THROWS_AS(gz_flow(A, {2, 1, 0.5}), Error);
  try {
    gz_flow(A, {2, 1, 0.5});
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::DegenerateLevel);
  }
  // the level-1 block has no gap condition to violate
  CHECK_NOTHROW(gz_flow(A, {1, 1, 0.5}));
}

TEST_CASE("flow spec validation") {
  const auto A = sample_orbit(uspec({4.0, 2.0, 0.0}), 80);
  CHECK_THROWS_AS(gz_flow(A, {0, 1, 0.5}), Error);
  CHECK_THROWS_AS(gz_flow(A, {4, 1, 0.5}), Error);
  CHECK_THROWS_AS(gz_flow(A, {2, 3, 0.5}), Error);
  CHECK_THROWS_AS(gz_flow(A, {2, 0, 0.5}), Error);

  MatrixPoint S;
  S.group = Group::SpecialOrthogonal;
  S.entries = Eigen::MatrixXcd::Zero(3, 3);
  S.entries(0, 1) = 1.0;
  S.entries(1, 0) = -1.0;
  CHECK_THROWS_AS(gz_flow(S, {2, 1, 0.5}), Error);
  try {
    gz_flow(S, {2, 1, 0.5});
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::UnsupportedGroup);
  }
}

TEST_CASE("coordinate search connects two fibre points at n=3") {
  GZPattern p;
  p.group = Group::Unitary;
  p.levels = {1, 2, 3};
  p.rows = {vec({2.2}), vec({3.1, 0.9}), vec({4.0, 2.0, 0.0})};
  REQUIRE(is_regular(p, 1e-6 * p.scale()));

  const auto A = inverse_gz(p, PhaseVector::random(3, 21));
  const auto B = inverse_gz(p, PhaseVector::random(3, 22));
  const double target = 1e-4 * A.scale();
  const auto res = connect_by_flows(A, B, target);
  CHECK(res.found);
  CHECK(res.distance <= target);
  CHECK(res.angles.size() == 3);  // (1,1), (2,1), (2,2)
  CHECK(res.evaluations > 0);

  // replaying the reported angles reproduces the reported distance
  MatrixPoint C = A;
  for (const auto& f : res.angles) C = gz_flow(C, f);
  CHECK((C.entries - B.entries).cwiseAbs().maxCoeff() <= res.distance + 1e-12);
}
