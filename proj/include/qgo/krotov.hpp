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

#ifndef QGO_KROTOV_HPP
#define QGO_KROTOV_HPP

#include <functional>
#include <string>
#include <vector>

#include "qgo/functionals.hpp"
#include "qgo/lindblad.hpp"
#include "qgo/state_sets.hpp"
#include "qgo/types.hpp"

namespace qgo {

struct StopCriteria {
  int max_iterations = 100;
  double j_t_threshold = 0.0;  // stop once j_t falls to or below this
  double min_decrease = 0.0;   // stop once the per-iteration j_t decrease falls below this
};

/// Everything one optimization run needs.  `shape` holds S(t) on the
/// nt + 1 grid edges, exactly zero at both ends; the update and the
/// penalty for interval k both read S at the interval's left edge.
struct OptimizationProblem {
  LindbladModel model;
  SubspaceEmbedding embedding{{0, 1}, 2};
  StateSet set;
  Mat logical_target;
  TimeGrid grid;
  int substeps = 1;
  ControlArray guess;
  double lambda_a = 1.0;
  RVec shape;
  StopCriteria stop;
  int fidelity_interval = 1;  // gate-error cadence in iterations; 0 disables
};

enum class OptimizationStatus {
  kConverged,
  kMaxIterations,
  kMonotonicityFault,
};

std::string status_name(OptimizationStatus status);

/// One row of the convergence trace.  Iteration 0 is the guess evaluation;
/// its j_total equals j_t since no update has been applied yet.
/// gate_error is NaN on iterations where the fidelity was not evaluated.
struct IterationRecord {
  int iteration = 0;
  double j_t = 0.0;
  double j_total = 0.0;
  double gate_error = 0.0;
  long long n_propagations = 0;  // cumulative, in full-grid state propagations
  double wall_time_seconds = 0.0;
};

struct OptimizationResult {
  ControlArray final_pulse;
  std::vector<IterationRecord> trace;
  OptimizationStatus status = OptimizationStatus::kMaxIterations;
  int fault_iteration = -1;
  std::string message;
};

/// Flat-top update shape on the grid edges: sin^2 ramps of `ramp_ns` at
/// both ends, exactly 0 at t = 0 and t = T, 1 on the plateau.
RVec flattop_shape(const TimeGrid& grid, double ramp_ns);

/// Per-channel field increment from aligned costate/state lists:
///   delta_c = s_over_lambda * sum_i 2 Im Tr[sigma_i X_c rho_i],
/// the descent direction of the gate functional for channel coupling X_c.
RVec update_increment(const std::vector<Mat>& costates,
                      const std::vector<Mat>& states,
                      const std::vector<Mat>& couplings,
                      double s_over_lambda);

/// Monotonically convergent gate optimization.  Holds the prepared
/// stepper, embedded initial states and terminal costates across
/// iterations; the terminal costates never change.
class KrotovOptimizer {
 public:
  explicit KrotovOptimizer(OptimizationProblem problem);

  struct IterationOutput {
    ControlArray pulse;
    double j_t = 0.0;
    double j_total = 0.0;  // penalty referenced to the input pulse
  };

  /// Backward sweep under `pulse_old`, then the concurrent forward sweep
  /// producing the updated pulse; see the class contract for sequencing.
  IterationOutput run_iteration(const ControlArray& pulse_old);

  /// Full loop with trace bookkeeping and the monotonicity fault detector.
  /// `on_iteration` runs after each trace row, the guess row included.
  OptimizationResult optimize(
      const std::function<void(const IterationRecord&)>& on_iteration = {});

  /// Gate error of a pulse via the dynamical map (d^2 propagations).
  double evaluate_gate_error(const ControlArray& pulse) const;

  double evaluate_j_t(const ControlArray& pulse) const;

  const IntervalStepper& stepper() const { return stepper_; }
  const OptimizationProblem& problem() const { return problem_; }

 private:
  OptimizationProblem problem_;
  IntervalStepper stepper_;
  std::vector<Mat> initial_states_;
  std::vector<Mat> terminal_costates_;
};

}  // namespace qgo

#endif  // QGO_KROTOV_HPP
