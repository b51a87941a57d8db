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

#ifndef QGO_LINDBLAD_HPP
#define QGO_LINDBLAD_HPP

#include <string>
#include <vector>

#include "qgo/operators.hpp"
#include "qgo/types.hpp"

namespace qgo {

/// Uniform time grid: nt control intervals over [0, t_total].  Controls are
/// held constant on each interval and sampled at its midpoint.
struct TimeGrid {
  double t_total = 0.0;
  int nt = 0;

  double dt() const { return t_total / nt; }
  double edge(int k) const { return k * dt(); }
  double midpoint(int k) const { return (k + 0.5) * dt(); }
};

/// Collapse channel: rate multiplies the dissipator of `op`.
struct CollapseOp {
  Mat op;
  double rate = 0.0;
  std::string label;
};

/// Open-system model with real control channels:
///   H(t) = h0 + sum_c u_c(t) couplings[c],
///   d rho / dt = -i[H, rho]
///              + sum_j rate_j (A_j rho A_j^dag - 1/2 {A_j^dag A_j, rho}).
/// A physical complex drive contributes two channels, one per quadrature.
struct LindbladModel {
  int dim = 0;
  Mat h0;
  std::vector<Mat> couplings;
  std::vector<std::string> control_names;
  std::vector<CollapseOp> collapse;
};

/// Throws std::invalid_argument on non-Hermitian operators, negative rates
/// or mismatched dimensions.
void validate_model(const LindbladModel& model);

/// Control samples: one row per interval, one column per channel.
using ControlArray = Eigen::MatrixXd;

/// Right-hand side of the master equation at fixed control values.
Mat generator_apply(const LindbladModel& model, const RVec& controls,
                    const Mat& m);

/// Hilbert-Schmidt adjoint of generator_apply:
///   +i[H, s] + sum_j rate_j (A_j^dag s A_j - 1/2 {A_j^dag A_j, s}).
Mat adjoint_generator_apply(const LindbladModel& model, const RVec& controls,
                            const Mat& s);

/// Propagates states across one control interval with a fixed-step
/// fourth-order Runge-Kutta scheme.
///
/// When every collapse operator shifts the drift diagonal uniformly and has
/// a diagonal A^dag A, the stepper integrates in the rotating frame of that
/// diagonal: phases are applied exactly, so the step size only has to
/// resolve off-diagonal drift and controls.  Otherwise it falls back to the
/// lab frame.
///
/// backward() is the exact Hilbert-Schmidt adjoint of forward() at equal
/// control values: Tr[s^dag forward(r)] == Tr[backward(s)^dag r] to
/// round-off, not merely to discretization order.
///
/// forward() and backward() reuse one preallocated workspace, so a single
/// stepper must not be called from two threads at once.
class IntervalStepper {
 public:
  IntervalStepper(const LindbladModel& model, double dt, int substeps);

  bool interaction_picture() const { return ip_mode_; }
  int dim() const { return dim_; }
  int substeps() const { return substeps_; }
  int channels() const { return static_cast<int>(couplings_.size()); }

  Mat forward(const Mat& rho, const RVec& controls) const;
  Mat backward(const Mat& sigma, const RVec& controls) const;

 private:
  void load_control_sum(const RVec& controls) const;
  void stage(int phase_index, const Mat& m, bool adjoint, Mat& out) const;

  /// Nonzero entries of one sqrt(rate)-scaled jump operator.  The
  /// collapse operators stay a handful of entries wide, so the sandwich
  /// products A m A^dag and A^dag m A are cheapest as direct
  /// entry-pair contractions.
  struct JumpEntries {
    std::vector<int> row;
    std::vector<int> col;
    std::vector<cxd> val;
  };

  int dim_ = 0;
  int substeps_ = 0;
  double h_ = 0.0;
  bool ip_mode_ = false;
  RVec theta_;              // drift diagonal handled exactly in ip mode
  Mat w_drift_;             // drift minus theta (full drift in lab mode)
  std::vector<Mat> couplings_;
  Mat gmat_;                // 1/2 sum rate_j A_j^dag A_j
  std::vector<JumpEntries> jumps_;
  std::vector<Mat> phases_;      // exp(+i (theta_a - theta_b) j h/2)
  Mat rotate_back_;              // exp(-i (theta_a - theta_b) dt)

  mutable Mat wsum_;   // drift plus current controls
  mutable Mat kmat_;   // -i W(s) -/+ G of the running stage
  mutable Mat sin_;    // stage input
  mutable Mat k1_, k2_, k3_, k4_;
};

/// Final state after all intervals.  `controls` must have grid.nt rows.
Mat propagate(const IntervalStepper& stepper, const TimeGrid& grid,
              const ControlArray& controls, const Mat& rho0);

/// States at every grid edge; result[k] is the state at time edge(k),
/// result.size() == nt + 1.
std::vector<Mat> propagate_forward(const IntervalStepper& stepper,
                                   const TimeGrid& grid,
                                   const ControlArray& controls,
                                   const Mat& rho0);

/// Costates at every grid edge from the terminal condition sigma(T);
/// result[k] holds sigma at edge(k).
std::vector<Mat> propagate_backward(const IntervalStepper& stepper,
                                    const TimeGrid& grid,
                                    const ControlArray& controls,
                                    const Mat& sigma_t);

/// Worst trace drift, Hermiticity defect and eigenvalue floor along a
/// trajectory of density matrices.
struct TrajectoryHealth {
  double max_trace_drift = 0.0;
  double max_asymmetry = 0.0;
  double min_eigenvalue = 0.0;

  bool ok() const {
    return max_trace_drift <= numeric_policy.prop_trace &&
           max_asymmetry <= numeric_policy.prop_hermiticity &&
           min_eigenvalue >= numeric_policy.prop_positivity;
  }
};

TrajectoryHealth trajectory_health(const std::vector<Mat>& states);

/// The time evolution restricted to the logical subspace as a d^2 x d^2
/// matrix acting on column-stacked operators: column i + j*d is the
/// propagated image of |i><j|.
Mat dynamical_map(const IntervalStepper& stepper, const TimeGrid& grid,
                  const ControlArray& controls,
                  const SubspaceEmbedding& embedding);

}  // namespace qgo

#endif  // QGO_LINDBLAD_HPP
