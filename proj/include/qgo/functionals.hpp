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

#ifndef QGO_FUNCTIONALS_HPP
#define QGO_FUNCTIONALS_HPP

#include <cstdint>
#include <vector>

#include "qgo/lindblad.hpp"
#include "qgo/state_sets.hpp"
#include "qgo/types.hpp"

namespace qgo {

/// Scalar figures of merit for one pulse.  gate_error = 1 - F_avg; NaN when
/// the fidelity was not evaluated.
struct FunctionalReport {
  double j_t = 0.0;
  double j_total = 0.0;
  double gate_error = 0.0;
  RVec per_state_overlaps;
};

/// Weighted gate-tracking functional
///   J_T = 1 - sum_i w_i / Tr[rho_i^2] * Re Tr[O rho_i O^dag finals_i],
/// evaluated on the logical space.  `overlaps` (optional) receives the
/// summands.  Zero when every final equals its rotated initial state.
double eval_j_t(const StateSet& set, const std::vector<Mat>& finals,
                const Mat& target, RVec* overlaps = nullptr);

/// Fluence penalty lambda_a * sum_c sum_k |pulse - ref|^2 / S_k * dt with
/// the shape sampled at each interval's left edge.  Intervals where the
/// deviation vanishes contribute nothing; a nonzero deviation where
/// S_k <= 0 is an error.
double control_penalty(const ControlArray& pulse, const ControlArray& ref,
                       const RVec& shape_edges, double lambda_a, double dt);

/// j_t plus the fluence penalty.
double eval_j_total(double j_t, const ControlArray& pulse,
                    const ControlArray& ref, const RVec& shape_edges,
                    double lambda_a, double dt);

/// Average gate fidelity of the dynamical map `map` (d^2 x d^2,
/// column-stacking) against the unitary `target` (d x d):
///   F = 1/(d(d+1)) sum_ij [ <i|O^dag D(|i><j|) O|j> + Tr(O|i><i|O^dag D(|j><j|)) ].
/// Errors when the accumulated imaginary part exceeds the policy bound.
double f_avg(const Mat& map, const Mat& target);

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_err = 0.0;
};

/// Haar-average gate fidelity estimated from n_samples random pure states
/// (normalized complex-Gaussian vectors).  Deterministic for a fixed seed;
/// n_samples must be at least 100.
MonteCarloEstimate f_avg_monte_carlo(const Mat& map, const Mat& target,
                                     int n_samples, std::uint64_t seed);

/// Sum of squared Hilbert-Schmidt distances
///   sum_i Tr[(O rho_i O^dag - finals_i)^2]
/// over the set's states.  Zero exactly when every final hits its target.
double eval_j_dist(const StateSet& set, const std::vector<Mat>& finals,
                   const Mat& target);

}  // namespace qgo

#endif  // QGO_FUNCTIONALS_HPP
