// Copyright 2026 The qgo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "qgo/functionals.hpp"
#include "qgo/models.hpp"
#include "qgo/verify.hpp"

using namespace qgo;

namespace {

std::vector<Mat> conjugated_states(const StateSet& set, const Mat& o) {
  std::vector<Mat> finals;
  for (const DensityMatrix& state : set.states) {
    finals.push_back(o * state.mat() * o.adjoint());
  }
  return finals;
}

std::vector<Mat> plain_states(const StateSet& set) {
  std::vector<Mat> finals;
  for (const DensityMatrix& state : set.states) finals.push_back(state.mat());
  return finals;
}

Mat depolarizing_map(int d) {
  const Mat identity_block = maximally_mixed_state(d);
  Mat map = Mat::Zero(d * d, d * d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      Mat unit = Mat::Zero(d, d);
      unit(i, j) = 1.0;
      map.col(i + j * d) = vec_columns(Mat(unit.trace() * identity_block));
    }
  }
  return map;
}

}  // namespace

TEST_SUITE("functionals") {

TEST_CASE("j_t vanishes exactly on target finals") {
  const StateSet set = build_state_set(SetKind::kMinimal3, 4);
  const Mat o = sqrt_iswap_target();
  CHECK(std::abs(eval_j_t(set, conjugated_states(set, o), o)) < 1e-13);

  RVec overlaps;
  CHECK(std::abs(eval_j_t(set, plain_states(set), Mat::Identity(4, 4),
                          &overlaps)) < 1e-13);
  REQUIRE(overlaps.size() == 3);
  CHECK(overlaps.sum() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("j_t reaches one when every rotated state is orthogonal") {
  StateSet set = build_state_set(SetKind::kFullBasis, 2);
  set.states.clear();
  set.states.emplace_back(projector(0, 2));
  set.states.emplace_back(projector(1, 2));
  set.weights = {0.5, 0.5};
  set.kind = SetKind::kDiagonal2;

  Mat flip = Mat::Zero(2, 2);
  flip(0, 1) = flip(1, 0) = 1.0;
  CHECK(eval_j_t(set, plain_states(set), flip) ==
        doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("control penalty quadrature and error paths") {
  const int nt = 50;
  const double t_total = 1.0;
  const double dt = t_total / nt;
  const ControlArray ref = ControlArray::Zero(nt, 1);
  const ControlArray pulse = ControlArray::Ones(nt, 1);
  const RVec shape = RVec::Ones(nt + 1);

  CHECK(control_penalty(pulse, ref, shape, 1.0, dt) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(control_penalty(ref, ref, shape, 1.0, dt) == 0.0);
  CHECK(eval_j_total(0.25, pulse, ref, shape, 0.0, dt) ==
        doctest::Approx(0.25).epsilon(1e-15));

  RVec dead = shape;
  dead(3) = 0.0;
  CHECK_THROWS_AS(control_penalty(pulse, ref, dead, 1.0, dt),
                  std::invalid_argument);
  ControlArray same = pulse;
  CHECK_NOTHROW(control_penalty(same, pulse, dead, 1.0, dt));
}

TEST_CASE("f_avg of unitary conjugation is one") {
  std::mt19937_64 rng(17);
  for (int d : {2, 3, 4}) {
    const Mat u = haar_unitary(d, rng);
    const Mat map = unitary_channel(u).superop;
    CHECK(f_avg(map, u) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("f_avg of complete depolarization is 1/d") {
  const Mat o = cphase_target(M_PI);
  CHECK(f_avg(depolarizing_map(4), o) == doctest::Approx(0.25).epsilon(1e-12));
  std::mt19937_64 rng(4);
  CHECK(f_avg(depolarizing_map(2), haar_unitary(2, rng)) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("f_avg rejects maps with an imaginary fidelity part") {
  Mat map = Mat::Identity(4, 4);
  map(0, 0) = cxd(0.0, 1.0);
  CHECK_THROWS_AS(f_avg(map, Mat::Identity(2, 2)), std::runtime_error);
}

TEST_CASE("monte carlo estimate matches the closed forms") {
  std::mt19937_64 rng(99);
  const Mat u = haar_unitary(4, rng);
  const Mat unitary_map = unitary_channel(u).superop;
  const MonteCarloEstimate exact = f_avg_monte_carlo(unitary_map, u, 200, 5);
  CHECK(std::abs(exact.mean - 1.0) < 1e-12);
  CHECK(exact.std_err < 1e-12);

  const MonteCarloEstimate depol =
      f_avg_monte_carlo(depolarizing_map(4), u, 100000, 12);
  CHECK(std::abs(depol.mean - 0.25) < 0.005);
  CHECK(depol.std_err < 0.005);

  CHECK_THROWS_AS(f_avg_monte_carlo(unitary_map, u, 99, 5),
                  std::invalid_argument);

  const MonteCarloEstimate again = f_avg_monte_carlo(unitary_map, u, 200, 5);
  CHECK(again.mean == exact.mean);
  CHECK(again.std_err == exact.std_err);
}

TEST_CASE("f_avg agrees with monte carlo on random channels") {
  for (std::uint64_t seed : {301, 302}) {
    CAPTURE(seed);
    std::mt19937_64 rng(seed);
    const Channel ch = random_kraus_channel(2, 3, rng);
    const Mat o = haar_unitary(2, rng);
    const double exact = f_avg(ch.superop, o);
    const MonteCarloEstimate mc = f_avg_monte_carlo(ch.superop, o, 100000, seed);
    CHECK(std::abs(exact - mc.mean) < 3.0 * std::max(mc.std_err, 1e-12));
  }
}

TEST_CASE("j_dist separates unitaries and forgives global phase") {
  const StateSet set = build_state_set(SetKind::kMinimal3, 4);
  const Mat o = sqrt_iswap_target();

  CHECK(std::abs(eval_j_dist(set, conjugated_states(set, o), o)) < 1e-14);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const Mat u = haar_unitary(4, rng);
    if (std::abs(hs_overlap(u, o)) > 4.0 - 1e-6) continue;
    CHECK(eval_j_dist(set, conjugated_states(set, u), o) > 1e-6);
  }

  for (double theta : {0.3, 1.7, 5.1}) {
    const Mat phased = std::exp(cxd(0.0, theta)) * o;
    CHECK(eval_j_dist(set, conjugated_states(set, phased), o) <
          numeric_policy.global_phase_jdist);
  }
}

}  // TEST_SUITE
