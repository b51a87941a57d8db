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
#include <limits>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qgo/functionals.hpp"
#include "qgo/krotov.hpp"
#include "qgo/models.hpp"
#include "qgo/state_sets.hpp"
#include "qgo/units.hpp"

namespace qgo {
namespace {

// Small three-level problem with smooth nonzero guess controls, cheap
// enough for derivative and scaling checks.
OptimizationProblem small_problem(double lambda_a, int nt, double t_total) {
  OptimizationProblem p;
  p.model = qgo_oracle::random_model(3, 911);
  p.embedding = SubspaceEmbedding({0, 1, 2}, 3);
  p.set = build_state_set(SetKind::kMinimal3, 3);
  Mat target = Mat::Identity(3, 3);
  target(1, 1) = std::exp(cxd(0.0, 0.4));
  target(2, 2) = std::exp(cxd(0.0, -0.9));
  p.logical_target = target;
  p.grid = TimeGrid{t_total, nt};
  p.substeps = 6;
  p.guess = ControlArray(nt, 2);
  for (int k = 0; k < nt; ++k) {
    const double t = p.grid.midpoint(k);
    p.guess(k, 0) = 0.3 * std::sin(kTwoPi * t / t_total);
    p.guess(k, 1) = 0.2 * std::cos(kTwoPi * 0.5 * t / t_total);
  }
  p.lambda_a = lambda_a;
  p.shape = flattop_shape(p.grid, 0.2 * t_total);
  return p;
}

OptimizationProblem rydberg_problem(int nt, double lambda_a) {
  const ModelBundle bundle = build_rydberg(RydbergParams{});
  OptimizationProblem p;
  p.model = bundle.model;
  p.embedding = bundle.embedding;
  p.set = build_state_set(SetKind::kDiagonal2, 4);
  p.logical_target = cphase_target(M_PI);
  p.grid = TimeGrid{75.0, nt};
  p.substeps = static_cast<int>(std::ceil(p.grid.dt() / bundle.max_substep_ns));
  p.guess = ControlArray::Zero(nt, 4);
  const RVec env = guess_envelope(GuessShape::kGaussian, mhz(300.0), p.grid,
                                  75.0 / 8.0);
  p.guess.col(0) = env;
  p.guess.col(2) = env;
  p.lambda_a = lambda_a;
  p.shape = flattop_shape(p.grid, 5.0);
  return p;
}

}  // namespace

TEST_SUITE("krotov") {
  TEST_CASE("flattop shape is zero at the ends and one on the plateau") {
    const TimeGrid grid{10.0, 10};
    const RVec s = flattop_shape(grid, 2.0);
    REQUIRE(s.size() == 11);
    CHECK(s(0) == 0.0);
    CHECK(s(10) == 0.0);
    CHECK(s(5) == 1.0);
    CHECK(s(1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s(9) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s.minCoeff() >= 0.0);
    CHECK(s.maxCoeff() == 1.0);

    CHECK_THROWS_AS(flattop_shape(grid, 6.0), std::invalid_argument);
    CHECK_THROWS_AS(flattop_shape(grid, 0.0), std::invalid_argument);
  }

  TEST_CASE("update increment reproduces hand values and vanishes when real") {
    Mat sx = Mat::Zero(2, 2);
    sx(0, 1) = 1.0;
    sx(1, 0) = 1.0;
    Mat sy = Mat::Zero(2, 2);
    sy(0, 1) = cxd(0.0, -1.0);
    sy(1, 0) = cxd(0.0, 1.0);
    Mat p0 = Mat::Zero(2, 2);
    p0(0, 0) = 1.0;

    // Tr[sy sx p0] = -i, so the channel increment is 2 Im(-i) * s = -2 s.
    const RVec delta = update_increment({sy}, {p0}, {sx}, 0.5);
    REQUIRE(delta.size() == 1);
    CHECK(delta(0) == doctest::Approx(-1.0).epsilon(1e-14));

    // A Hermitian costate times a commuting pair gives a real trace.
    const RVec zero = update_increment({Mat::Identity(2, 2)}, {p0}, {sx}, 1.0);
    CHECK(std::abs(zero(0)) <= 1e-15);

    CHECK_THROWS_AS(update_increment({sy, sy}, {p0}, {sx}, 1.0),
                    std::invalid_argument);
  }

  TEST_CASE("field increment matches the finite-difference gradient of j_t") {
    const OptimizationProblem p = small_problem(1.0, 40, 2.0);
    KrotovOptimizer opt(p);
    const IntervalStepper& stepper = opt.stepper();

    const std::vector<Mat> initials = embedded_states(p.set, p.embedding);
    const std::vector<Mat> terminals =
        boundary_costates(p.set, p.embedding, p.logical_target);

    std::vector<std::vector<Mat>> rho(initials.size()), sigma(initials.size());
    for (size_t i = 0; i < initials.size(); ++i) {
      rho[i] = propagate_forward(stepper, p.grid, p.guess, initials[i]);
      sigma[i] = propagate_backward(stepper, p.grid, p.guess, terminals[i]);
    }

    auto gradient_row = [&](int k) {
      std::vector<Mat> costate_edge, state_edge;
      for (size_t i = 0; i < initials.size(); ++i) {
        costate_edge.push_back(sigma[i][k]);
        state_edge.push_back(rho[i][k]);
      }
      return update_increment(costate_edge, state_edge, p.model.couplings, 1.0);
    };

    const double dt = p.grid.dt();
    const double h = 1e-3;
    double gmax = 0.0;
    std::vector<std::pair<int, int>> probes = {
        {0, 0}, {7, 1}, {13, 0}, {20, 1}, {27, 0}, {39, 1}};

    std::vector<double> analytic(probes.size()), numeric(probes.size());
    for (size_t n = 0; n < probes.size(); ++n) {
      const auto [k, c] = probes[n];
      const RVec trapezoid = 0.5 * (gradient_row(k) + gradient_row(k + 1));
      analytic[n] = -dt * trapezoid(c);
      gmax = std::max(gmax, std::abs(analytic[n]));

      ControlArray up = p.guess, down = p.guess;
      up(k, c) += h;
      down(k, c) -= h;
      numeric[n] = (opt.evaluate_j_t(up) - opt.evaluate_j_t(down)) / (2.0 * h);
    }
    REQUIRE(gmax > 1e-4);
    for (size_t n = 0; n < probes.size(); ++n) {
      CHECK(std::abs(numeric[n] - analytic[n]) <=
            5e-3 * std::max(std::abs(analytic[n]), 0.05 * gmax));
    }
  }

  TEST_CASE("iteration j_total decomposes into j_t plus the fluence penalty") {
    const OptimizationProblem p = small_problem(2.5, 24, 1.5);
    KrotovOptimizer opt(p);
    const auto step = opt.run_iteration(p.guess);

    const double j_t_direct = opt.evaluate_j_t(step.pulse);
    const double penalty = control_penalty(step.pulse, p.guess, p.shape,
                                           p.lambda_a, p.grid.dt());
    CHECK(step.j_t == doctest::Approx(j_t_direct).epsilon(1e-12));
    CHECK(step.j_total ==
          doctest::Approx(j_t_direct + penalty).epsilon(1e-12));
    CHECK(penalty > 0.0);
  }

  TEST_CASE("an enormous penalty weight freezes the pulse") {
    const OptimizationProblem p = small_problem(1e12, 24, 1.5);
    KrotovOptimizer opt(p);
    const double j_t_guess = opt.evaluate_j_t(p.guess);
    const auto step = opt.run_iteration(p.guess);

    CHECK((step.pulse - p.guess).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK(std::abs(step.j_t - j_t_guess) <= 1e-9);
  }

  TEST_CASE("doubling the penalty weight halves the first field increment") {
    const OptimizationProblem pa = small_problem(0.8, 24, 1.5);
    OptimizationProblem pb = pa;
    pb.lambda_a = 1.6;

    KrotovOptimizer opt_a(pa);
    KrotovOptimizer opt_b(pb);
    const ControlArray pulse_a = opt_a.run_iteration(pa.guess).pulse;
    const ControlArray pulse_b = opt_b.run_iteration(pb.guess).pulse;

    // The interval-0 shape value is zero, so its field never moves and the
    // interval-1 update sees identical states and costates in both runs.
    CHECK((pulse_a.row(0) - pa.guess.row(0)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((pulse_b.row(0) - pa.guess.row(0)).cwiseAbs().maxCoeff() == 0.0);

    const Eigen::RowVectorXd delta_a = pulse_a.row(1) - pa.guess.row(1);
    const Eigen::RowVectorXd delta_b = pulse_b.row(1) - pa.guess.row(1);
    REQUIRE(delta_a.cwiseAbs().maxCoeff() > 1e-10);
    CHECK((delta_b - 0.5 * delta_a).cwiseAbs().maxCoeff() <=
          1e-12 * delta_a.cwiseAbs().maxCoeff());
  }

  TEST_CASE("an already optimal guess is left untouched") {
    OptimizationProblem p;
    p.model.dim = 2;
    p.model.h0 = Mat::Zero(2, 2);
    Mat sx = Mat::Zero(2, 2);
    sx(0, 1) = 1.0;
    sx(1, 0) = 1.0;
    Mat sy = Mat::Zero(2, 2);
    sy(0, 1) = cxd(0.0, -1.0);
    sy(1, 0) = cxd(0.0, 1.0);
    p.model.couplings = {sx, sy};
    p.model.control_names = {"re", "im"};
    p.embedding = SubspaceEmbedding({0, 1}, 2);
    p.set = build_state_set(SetKind::kDiagonal2, 2);
    p.logical_target = Mat::Identity(2, 2);
    p.grid = TimeGrid{1.0, 10};
    p.substeps = 2;
    p.guess = ControlArray::Zero(10, 2);
    p.lambda_a = 1.0;
    p.shape = flattop_shape(p.grid, 0.2);
    p.stop.max_iterations = 3;
    p.stop.j_t_threshold = 1e-12;

    KrotovOptimizer opt(p);
    const OptimizationResult result = opt.optimize();

    CHECK(result.status == OptimizationStatus::kConverged);
    CHECK(result.trace.back().j_t <= 1e-12);
    CHECK(result.final_pulse.cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("zero iterations return the evaluated guess") {
    OptimizationProblem p = small_problem(1.0, 16, 1.0);
    p.stop.max_iterations = 0;
    KrotovOptimizer opt(p);
    const OptimizationResult result = opt.optimize();

    REQUIRE(result.trace.size() == 1);
    CHECK(result.status == OptimizationStatus::kMaxIterations);
    CHECK(result.trace[0].iteration == 0);
    CHECK(result.trace[0].j_total == result.trace[0].j_t);
    CHECK(std::isfinite(result.trace[0].gate_error));
    CHECK((result.final_pulse - p.guess).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("gate optimization descends monotonically on the atom pair") {
    OptimizationProblem p = rydberg_problem(500, 1.0);
    p.stop.max_iterations = 8;
    p.fidelity_interval = 1;
    KrotovOptimizer opt(p);

    int callbacks = 0;
    const OptimizationResult result =
        opt.optimize([&](const IterationRecord&) { ++callbacks; });

    REQUIRE(result.trace.size() == 9);
    CHECK(callbacks == 9);
    CHECK(result.status == OptimizationStatus::kMaxIterations);

    // Two states to track plus a 16-column map evaluation per row; each
    // iteration adds one backward and one forward sweep of the pair.
    for (int k = 0; k < 9; ++k) {
      const IterationRecord& row = result.trace[k];
      CHECK(row.iteration == k);
      CHECK(row.n_propagations == 18 + 20 * k);
      CHECK(std::isfinite(row.gate_error));
      CHECK(row.gate_error > 0.0);
      CHECK(row.gate_error < 1.0);
      if (k > 0) {
        CHECK(row.j_t < result.trace[k - 1].j_t);
        CHECK(row.wall_time_seconds >= result.trace[k - 1].wall_time_seconds);
      }
    }

    // First update: the functional plus its move cost may not exceed the
    // previous functional beyond the time-discretization excess.
    CHECK(result.trace[1].j_total >= result.trace[0].j_t - 1e-12);
    CHECK(result.trace[1].j_total <= result.trace[0].j_t + 1e-4);
    // Later updates: non-increasing j_total.
    for (int k = 2; k < 9; ++k) {
      CHECK(result.trace[k].j_total <=
            result.trace[k - 1].j_total +
                1e-10 * std::max(1.0, std::abs(result.trace[k - 1].j_total)));
    }

    // The shape pins the field at the first interval to its guess value.
    CHECK((result.final_pulse.row(0) - p.guess.row(0)).cwiseAbs().maxCoeff() ==
          0.0);
    // Real progress was made.
    CHECK(result.trace.back().j_t < 0.98 * result.trace.front().j_t);
  }

  TEST_CASE("a reckless penalty weight trips the monotonicity detector") {
    OptimizationProblem p = rydberg_problem(16, 1e-2);
    p.stop.max_iterations = 12;
    p.stop.j_t_threshold = -std::numeric_limits<double>::infinity();
    p.fidelity_interval = 0;
    KrotovOptimizer opt(p);
    const OptimizationResult result = opt.optimize();

    CHECK(result.status == OptimizationStatus::kMonotonicityFault);
    CHECK(result.fault_iteration >= 2);
    CHECK(!result.message.empty());
    CHECK(result.trace.back().j_total >
          result.trace[result.trace.size() - 2].j_total);
  }
}

}  // namespace qgo
