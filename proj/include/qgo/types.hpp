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

#ifndef QGO_TYPES_HPP
#define QGO_TYPES_HPP

#include <complex>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace qgo {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using SpMat = Eigen::SparseMatrix<cxd>;

/// Every numeric threshold used to decide pass/fail, physical/unphysical or
/// converged/diverged lives here.  Nothing in the library hard-codes its own
/// epsilon; tests and library code share this single record.
struct NumericPolicy {
  // Structural checks on operators and states.
  double hermiticity = 1e-10;       // max |A - A^dag| entry, relative to scale
  double trace_one = 1e-10;         // |Tr rho - 1|
  double positivity_floor = -1e-9;  // smallest admissible eigenvalue of a state
  double spectrum_sum = 1e-9;       // |sum(eigenvalues) - Tr|
  double unitarity = 1e-10;         // max |U^dag U - 1| entry
  double weight_sum = 1e-12;        // |sum w_i - 1|

  // Propagation health (checked over full gate durations).
  double prop_trace = 1e-8;       // trace drift
  double prop_hermiticity = 1e-8; // Hermiticity drift
  double prop_positivity = -1e-7; // eigenvalue floor after propagation
  double prop_oracle = 1e-7;      // agreement with the superoperator oracle

  // Functionals and optimization.
  double monotonicity_rel = 1e-10;  // allowed relative uptick of j_total
  double favg_imag = 1e-8;          // tolerated imaginary part in F_avg
  double global_phase_jdist = 1e-10;// J_dist for phase-equivalent unitaries

  // Channel verification.
  double choi_unitary = 1e-6;    // eigenvalue window for the rank-1 Choi test
  double trace_preserving = 1e-8;// |Tr D(B) - Tr B| on basis matrices
  double choi_positivity = -1e-8;// smallest admissible Choi eigenvalue
  double spectrum_invariant = 1e-7; // eigenvalue drift under a channel
  double rotated_floor = 1e-9;   // ||P P_i|| must exceed this for "rotated"
  double eigengap = 1e-8;        // isolation gap for 1-d eigenprojectors
};

inline constexpr NumericPolicy numeric_policy{};

}  // namespace qgo

#endif  // QGO_TYPES_HPP
