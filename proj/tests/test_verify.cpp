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
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "oracles.hpp"
#include "qgo/state_sets.hpp"
#include "qgo/verify.hpp"

namespace qgo {
namespace {

std::vector<Mat> canonical_projectors(int d) {
  std::vector<Mat> basis;
  for (int i = 0; i < d; ++i) {
    Mat p = Mat::Zero(d, d);
    p(i, i) = 1.0;
    basis.push_back(p);
  }
  return basis;
}

// vec(K rho K^dag) = (conj(K) (x) K) vec(rho) under column stacking.
Channel kraus_channel(const std::vector<Mat>& kraus) {
  const int d = static_cast<int>(kraus[0].rows());
  Mat s = Mat::Zero(d * d, d * d);
  for (const Mat& k : kraus) s += kron(k.conjugate(), k);
  return make_channel(s);
}

Channel amplitude_damping(double p) {
  Mat k0 = Mat::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - p);
  Mat k1 = Mat::Zero(2, 2);
  k1(0, 1) = std::sqrt(p);
  return kraus_channel({k0, k1});
}

Mat pauli_x() {
  Mat sx = Mat::Zero(2, 2);
  sx(0, 1) = 1.0;
  sx(1, 0) = 1.0;
  return sx;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("unitary channels conjugate states") {
    std::mt19937_64 rng(1001);
    const Mat u = haar_unitary(3, rng);
    const Channel ch = unitary_channel(u);
    const Mat rho = qgo_oracle::random_density(3, rng);
    CHECK((channel_apply(ch, rho) - u * rho * u.adjoint())
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
    CHECK(is_trace_preserving(ch));
  }

  TEST_CASE("haar sampling is deterministic and unitary") {
    std::mt19937_64 rng_a(7);
    std::mt19937_64 rng_b(7);
    const Mat u = haar_unitary(4, rng_a);
    const Mat v = haar_unitary(4, rng_b);
    CHECK((u - v).cwiseAbs().maxCoeff() == 0.0);
    CHECK((u.adjoint() * u - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() <=
          1e-12);
  }

  TEST_CASE("choi matrix of a unitary has a single eigenvalue d") {
    std::mt19937_64 rng(1002);
    const Channel ch = unitary_channel(haar_unitary(4, rng));
    const Mat choi = choi_matrix(ch);
    CHECK((choi - choi.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(std::abs(choi.trace().real() - 4.0) <= 1e-10);

    Eigen::SelfAdjointEigenSolver<Mat> es(choi);
    const RVec evs = es.eigenvalues();
    CHECK(std::abs(evs(15) - 4.0) <= 1e-10);
    CHECK(std::abs(evs(14)) <= 1e-10);
  }

  TEST_CASE("unitarity decision separates conjugations from mixtures") {
    std::mt19937_64 rng(1003);
    CHECK(channel_is_unitary(unitary_channel(haar_unitary(4, rng))));

    const std::vector<Mat> us = {Mat::Identity(2, 2), pauli_x()};
    RVec w(2);
    w << 1.0, 1.0;
    CHECK(!channel_is_unitary(mixture_channel(us, w)));

    // Doubling the superoperator breaks trace preservation.
    Channel broken = unitary_channel(Mat::Identity(2, 2));
    broken.superop *= 2.0;
    CHECK(!is_trace_preserving(broken));
    CHECK_THROWS_AS(channel_is_unitary(broken), std::invalid_argument);
  }

  TEST_CASE("totally rotated projectors overlap every basis member") {
    const auto basis4 = canonical_projectors(4);
    CHECK(is_totally_rotated(totally_rotated_state(4), basis4));
    // A basis member has zero overlap with the other three.
    CHECK(!is_totally_rotated(basis4[0], basis4));

    const auto basis2 = canonical_projectors(2);
    CHECK(is_totally_rotated(totally_rotated_state(2), basis2));

    // Mixed-state input is not a projector.
    CHECK_THROWS_AS(is_totally_rotated(maximally_mixed_state(2), basis2),
                    std::invalid_argument);
    // Non-orthogonal basis.
    CHECK_THROWS_AS(
        is_totally_rotated(basis2[0],
                           {basis2[0], totally_rotated_state(2)}),
        std::invalid_argument);
  }

  TEST_CASE("completeness plus rotation classifies state families") {
    auto as_density = [](const Mat& m) { return DensityMatrix(m); };

    const std::vector<DensityMatrix> good = {
        as_density(ordered_spectrum_state(4)),
        as_density(totally_rotated_state(4))};
    CHECK(is_complete_totally_rotating(good));

    // Fully degenerate spectrum supplies no projector.
    const std::vector<DensityMatrix> flat = {
        as_density(maximally_mixed_state(4))};
    CHECK(!is_complete_totally_rotating(flat));

    // Complete but nothing rotated against the eigenbasis.
    const std::vector<DensityMatrix> unrotated = {
        as_density(ordered_spectrum_state(4))};
    CHECK(!is_complete_totally_rotating(unrotated));
  }

  TEST_CASE("spectrum invariance holds for unitaries only") {
    std::mt19937_64 rng(1004);
    const Mat rho = qgo_oracle::random_density(2, rng);
    CHECK(spectrum_invariant(unitary_channel(haar_unitary(2, rng)), rho));
    CHECK(!spectrum_invariant(amplitude_damping(0.5), rho));
  }

  TEST_CASE("unitality holds for mixtures of unitaries but not damping") {
    std::mt19937_64 rng(1005);
    CHECK(is_unital(unitary_channel(haar_unitary(3, rng))));

    std::vector<Mat> us = {haar_unitary(2, rng), haar_unitary(2, rng),
                           haar_unitary(2, rng)};
    RVec w(3);
    w << 0.5, 1.2, 0.3;
    CHECK(is_unital(mixture_channel(us, w)));
    CHECK(is_trace_preserving(mixture_channel(us, w)));

    CHECK(!is_unital(amplitude_damping(0.4)));
  }

  TEST_CASE("random kraus channels are CPTP and generically non-unitary") {
    std::mt19937_64 rng(1006);
    const Channel ch = random_kraus_channel(3, 3, rng);
    CHECK(is_trace_preserving(ch, 1e-10));

    Eigen::SelfAdjointEigenSolver<Mat> es(choi_matrix(ch));
    CHECK(es.eigenvalues().minCoeff() >= -1e-10);
    CHECK(!channel_is_unitary(ch));
  }

  TEST_CASE("battery passes on seeded samples and repeats exactly") {
    BatteryOptions options;
    options.samples_per_dim = 5;
    options.seed = 42;
    const BatteryReport report = run_verification_battery(options);
    CHECK(report.all_pass);
    CHECK(!report.vacuous);
    REQUIRE(!report.rows.empty());
    for (const BatteryRow& row : report.rows) {
      CHECK(row.pass);
    }

    const BatteryReport again = run_verification_battery(options);
    REQUIRE(again.rows.size() == report.rows.size());
    for (size_t i = 0; i < report.rows.size(); ++i) {
      CHECK(again.rows[i].property == report.rows[i].property);
      CHECK(again.rows[i].checked == report.rows[i].checked);
      CHECK(again.rows[i].detail == report.rows[i].detail);
    }
  }

  TEST_CASE("an empty battery passes vacuously but says so") {
    BatteryOptions options;
    options.samples_per_dim = 0;
    const BatteryReport report = run_verification_battery(options);
    CHECK(report.all_pass);
    CHECK(report.vacuous);
  }
}

}  // namespace qgo
