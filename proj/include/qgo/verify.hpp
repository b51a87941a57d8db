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

#ifndef QGO_VERIFY_HPP
#define QGO_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qgo/operators.hpp"
#include "qgo/state_sets.hpp"
#include "qgo/types.hpp"

namespace qgo {

/// A linear map on operators, stored as a d^2 x d^2 matrix acting on
/// column-stacked inputs.
struct Channel {
  int dim = 0;
  Mat superop;
};

Channel make_channel(Mat superop);

/// Conjugation by a unitary.
Channel unitary_channel(const Mat& u);

/// Convex mixture of unitary conjugations; weights need not be normalized.
Channel mixture_channel(const std::vector<Mat>& unitaries, const RVec& weights);

Mat channel_apply(const Channel& ch, const Mat& m);

/// Tr D(B) = Tr B on every basis matrix, within tol.
bool is_trace_preserving(const Channel& ch,
                         double tol = numeric_policy.trace_preserving);

/// Choi matrix sum_ij E_ij (x) D(E_ij); block (i, j) holds D(|i><j|).
Mat choi_matrix(const Channel& ch);

/// True iff the Frobenius norm of P P_i exceeds `floor` for every basis
/// projector.  P and the basis members must be rank-1 projectors (within
/// 1e-9) and the basis mutually orthogonal; violations are errors.
bool is_totally_rotated(const Mat& p, const std::vector<Mat>& basis,
                        double floor = numeric_policy.rotated_floor);

/// True iff the eigenprojectors of the states supply d orthogonal
/// one-dimensional projectors (completeness) and some member's
/// eigenprojector is totally rotated with respect to them.  Eigenvalues
/// closer than the policy gap count as degenerate and contribute no
/// projector.
bool is_complete_totally_rotating(const std::vector<DensityMatrix>& states);

/// Sorted spectra of rho and ch(rho) agree elementwise within tol.
bool spectrum_invariant(const Channel& ch, const Mat& rho,
                        double tol = numeric_policy.spectrum_invariant);

/// ||ch(1/d) - 1/d||_F <= tol.
bool is_unital(const Channel& ch, double tol = numeric_policy.spectrum_invariant);

/// Choi-spectrum unitarity decision: a single eigenvalue equal to d within
/// the policy window and all others negligible.  Errors on channels that
/// are not CPTP within tolerance.
bool channel_is_unitary(const Channel& ch);

/// Haar-distributed unitary via QR of a complex Ginibre matrix.
Mat haar_unitary(int d, std::mt19937_64& rng);

/// Random CPTP channel from `n_kraus` Gaussian Kraus operators, normalized
/// to be exactly trace-preserving.
Channel random_kraus_channel(int d, int n_kraus, std::mt19937_64& rng);

struct BatteryOptions {
  std::vector<int> dims = {2, 3, 4};
  int samples_per_dim = 200;
  std::uint64_t seed = 0;
};

struct BatteryRow {
  std::string property;
  int checked = 0;
  bool pass = false;
  std::string detail;
};

struct BatteryReport {
  std::vector<BatteryRow> rows;
  bool all_pass = false;
  bool vacuous = false;  // zero samples requested
};

/// Executable equivalence checks: for seeded random channels (Haar
/// unitaries and convex mixtures of up to four of them) the unitality +
/// spectrum-invariance route and the projector-image route must each agree
/// with the Choi oracle on every sample, alongside fixed set-property
/// checks.
BatteryReport run_verification_battery(const BatteryOptions& options);

}  // namespace qgo

#endif  // QGO_VERIFY_HPP
