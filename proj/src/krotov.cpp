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

#include "qgo/krotov.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qgo {
namespace {

void validate_problem(const OptimizationProblem& p) {
  validate_model(p.model);
  if (p.embedding.full_dim() != p.model.dim ||
      p.embedding.logical_dim() != p.set.dim) {
    throw std::invalid_argument("problem: embedding does not match model/set");
  }
  if (p.grid.nt < 1 || !(p.grid.t_total > 0.0)) {
    throw std::invalid_argument("problem: invalid time grid");
  }
  if (p.guess.rows() != p.grid.nt ||
      p.guess.cols() != static_cast<Eigen::Index>(p.model.couplings.size())) {
    throw std::invalid_argument("problem: guess pulse shape mismatch");
  }
  if (!(p.lambda_a > 0.0)) {
    throw std::invalid_argument("problem: lambda_a must be positive");
  }
  if (p.shape.size() != p.grid.nt + 1) {
    throw std::invalid_argument("problem: shape must live on the grid edges");
  }
  if (p.shape(0) != 0.0 || p.shape(p.grid.nt) != 0.0) {
    throw std::invalid_argument("problem: shape must vanish exactly at t=0 and t=T");
  }
  if (p.shape.minCoeff() < 0.0) {
    throw std::invalid_argument("problem: shape must be non-negative");
  }
  if (p.stop.max_iterations < 0 || p.fidelity_interval < 0) {
    throw std::invalid_argument("problem: negative iteration counts");
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

std::string status_name(OptimizationStatus status) {
  switch (status) {
    case OptimizationStatus::kConverged: return "converged";
    case OptimizationStatus::kMaxIterations: return "max_iter";
    case OptimizationStatus::kMonotonicityFault: return "monotonicity_fault";
  }
  throw std::logic_error("unreachable status");
}

RVec flattop_shape(const TimeGrid& grid, double ramp_ns) {
  if (!(ramp_ns > 0.0) || 2.0 * ramp_ns > grid.t_total) {
    throw std::invalid_argument("shape: ramps must be positive and fit the duration");
  }
  RVec s(grid.nt + 1);
  for (int k = 0; k <= grid.nt; ++k) {
    const double t = grid.edge(k);
    if (t < ramp_ns) {
      const double u = std::sin(0.5 * M_PI * t / ramp_ns);
      s(k) = u * u;
    } else if (t > grid.t_total - ramp_ns) {
      const double u = std::sin(0.5 * M_PI * (grid.t_total - t) / ramp_ns);
      s(k) = u * u;
    } else {
      s(k) = 1.0;
    }
  }
  s(0) = 0.0;
  s(grid.nt) = 0.0;
  return s;
}

RVec update_increment(const std::vector<Mat>& costates,
                      const std::vector<Mat>& states,
                      const std::vector<Mat>& couplings,
                      double s_over_lambda) {
  if (costates.size() != states.size()) {
    throw std::invalid_argument("update: costate/state lists not aligned");
  }
  RVec delta = RVec::Zero(static_cast<Eigen::Index>(couplings.size()));
  for (size_t i = 0; i < states.size(); ++i) {
    // Tr[sigma X rho] = sum_ab X_ab (rho sigma)_ba; one product per state
    // serves every channel.
    const Mat mixed = states[i] * costates[i];
    for (size_t c = 0; c < couplings.size(); ++c) {
      const cxd trace = couplings[c].cwiseProduct(mixed.transpose()).sum();
      delta(static_cast<Eigen::Index>(c)) += 2.0 * trace.imag();
    }
  }
  return s_over_lambda * delta;
}

KrotovOptimizer::KrotovOptimizer(OptimizationProblem problem)
    : problem_(std::move(problem)),
      stepper_(problem_.model, problem_.grid.dt(), problem_.substeps) {
  validate_problem(problem_);
  require_unitary(problem_.logical_target, "gate target");
  initial_states_ = embedded_states(problem_.set, problem_.embedding);
  terminal_costates_ =
      boundary_costates(problem_.set, problem_.embedding, problem_.logical_target);
}

double KrotovOptimizer::evaluate_gate_error(const ControlArray& pulse) const {
  const Mat map = dynamical_map(stepper_, problem_.grid, pulse, problem_.embedding);
  return 1.0 - f_avg(map, problem_.logical_target);
}

double KrotovOptimizer::evaluate_j_t(const ControlArray& pulse) const {
  double overlap = 0.0;
  for (size_t i = 0; i < initial_states_.size(); ++i) {
    const Mat fin = propagate(stepper_, problem_.grid, pulse, initial_states_[i]);
    overlap += (terminal_costates_[i] * fin).trace().real();
  }
  return 1.0 - overlap;
}

KrotovOptimizer::IterationOutput KrotovOptimizer::run_iteration(
    const ControlArray& pulse_old) {
  const int nt = problem_.grid.nt;
  const size_t n_states = initial_states_.size();

  // Backward sweep under the old pulse, storing costates at every edge.
  std::vector<std::vector<Mat>> costates(n_states);
  for (size_t i = 0; i < n_states; ++i) {
    costates[i] = propagate_backward(stepper_, problem_.grid, pulse_old,
                                     terminal_costates_[i]);
  }

  // Concurrent forward sweep: each interval first updates the field from
  // the stored costates and the freshly advanced states, then advances all
  // states under the updated value.
  ControlArray pulse_new = pulse_old;
  std::vector<Mat> states = initial_states_;
  std::vector<Mat> costate_slice(n_states);
  for (int k = 0; k < nt; ++k) {
    if (problem_.shape(k) > 0.0) {
      for (size_t i = 0; i < n_states; ++i) costate_slice[i] = costates[i][k];
      const RVec delta =
          update_increment(costate_slice, states, problem_.model.couplings,
                           problem_.shape(k) / problem_.lambda_a);
      if (!delta.allFinite()) {
        throw std::runtime_error("krotov: non-finite field increment at interval " +
                                 std::to_string(k));
      }
      pulse_new.row(k) += delta.transpose();
    }
    for (size_t i = 0; i < n_states; ++i) {
      states[i] = stepper_.forward(states[i], pulse_new.row(k).transpose());
    }
  }

  IterationOutput out;
  out.pulse = std::move(pulse_new);
  double overlap = 0.0;
  for (size_t i = 0; i < n_states; ++i) {
    overlap += (terminal_costates_[i] * states[i]).trace().real();
  }
  out.j_t = 1.0 - overlap;
  out.j_total = eval_j_total(out.j_t, out.pulse, pulse_old, problem_.shape,
                             problem_.lambda_a, problem_.grid.dt());
  return out;
}

OptimizationResult KrotovOptimizer::optimize(
    const std::function<void(const IterationRecord&)>& on_iteration) {
  const auto start = std::chrono::steady_clock::now();
  const size_t n_states = initial_states_.size();
  const int d = problem_.embedding.logical_dim();
  const double nan = std::numeric_limits<double>::quiet_NaN();

  OptimizationResult result;
  ControlArray pulse = problem_.guess;
  long long props = 0;

  auto gate_error_due = [&](int iteration) {
    return problem_.fidelity_interval > 0 &&
           iteration % problem_.fidelity_interval == 0;
  };
  auto eval_gate_error = [&](bool due) {
    if (!due) return nan;
    props += d * d;
    return evaluate_gate_error(pulse);
  };

  // Iteration 0: the guess itself.  No update has produced this pulse, so
  // the penalty term is not defined for it and j_total reports j_t.
  {
    IterationRecord row;
    row.iteration = 0;
    row.j_t = evaluate_j_t(pulse);
    props += static_cast<long long>(n_states);
    row.j_total = row.j_t;
    row.gate_error = eval_gate_error(gate_error_due(0));
    row.n_propagations = props;
    row.wall_time_seconds = seconds_since(start);
    result.trace.push_back(row);
    if (on_iteration) on_iteration(row);
  }

  result.status = OptimizationStatus::kMaxIterations;
  for (int iter = 1; iter <= problem_.stop.max_iterations; ++iter) {
    IterationOutput step = run_iteration(pulse);
    props += 2 * static_cast<long long>(n_states);
    pulse = std::move(step.pulse);

    IterationRecord row;
    row.iteration = iter;
    row.j_t = step.j_t;
    row.j_total = step.j_total;

    const IterationRecord& prev = result.trace.back();
    bool stop = false;
    // The decrease of j_total between update-produced iterates inherits
    // the previous j_t decrease as its margin; the guess row carries no
    // penalty and is excluded from the comparison.
    if (iter >= 2) {
      const double allowed =
          prev.j_total +
          numeric_policy.monotonicity_rel * std::max(1.0, std::abs(prev.j_total));
      if (row.j_total > allowed) {
        result.status = OptimizationStatus::kMonotonicityFault;
        result.fault_iteration = iter;
        result.message = "j_total rose from " + std::to_string(prev.j_total) +
                         " to " + std::to_string(row.j_total) + " at iteration " +
                         std::to_string(iter);
        stop = true;
      }
    }
    if (!stop && row.j_t <= problem_.stop.j_t_threshold) {
      result.status = OptimizationStatus::kConverged;
      result.message = "j_t reached its threshold";
      stop = true;
    }
    if (!stop && problem_.stop.min_decrease > 0.0 &&
        prev.j_t - row.j_t < problem_.stop.min_decrease) {
      result.status = OptimizationStatus::kConverged;
      result.message = "j_t decrease fell below min_decrease";
      stop = true;
    }
    const bool last = stop || iter == problem_.stop.max_iterations;
    row.gate_error = eval_gate_error(gate_error_due(iter) || last);
    row.n_propagations = props;
    row.wall_time_seconds = seconds_since(start);
    result.trace.push_back(row);
    if (on_iteration) on_iteration(row);
    if (stop) break;
  }

  result.final_pulse = std::move(pulse);
  return result;
}

}  // namespace qgo
