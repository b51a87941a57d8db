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

#ifndef QGO_STATE_SETS_HPP
#define QGO_STATE_SETS_HPP

#include <string>
#include <vector>

#include "qgo/operators.hpp"
#include "qgo/types.hpp"

namespace qgo {

/// Families of initial states used to track a gate on a d-dimensional
/// logical subspace.  Smaller families trade per-iteration cost against the
/// strength of the optimization signal.
enum class SetKind {
  kDiagonal2,  // one totally rotated pure state + the maximally mixed state
  kMinimal3,   // adds a density matrix with distinct, ordered eigenvalues
  kExtended,   // d canonical projectors + the totally rotated pure state
  kMub2d,      // d canonical projectors + d mutually unbiased projectors
  kFullBasis,  // d^2 pure states spanning all matrix units
};

SetKind parse_set_kind(const std::string& name);
std::string set_kind_name(SetKind kind);
std::vector<SetKind> all_set_kinds();

/// Weighted family of validated logical states.  Weights are normalized to
/// sum to one.
struct StateSet {
  SetKind kind;
  int dim = 0;
  std::vector<DensityMatrix> states;
  std::vector<double> weights;
};

/// Density matrix with eigenvalues 2(d-i+1)/(d(d+1)), i = 1..d: distinct,
/// strictly ordered, summing to one.
Mat ordered_spectrum_state(int d);

/// Pure state (1/d) sum_ij |i><j|, the projector onto the equal
/// superposition of all basis states.
Mat totally_rotated_state(int d);

/// Maximally mixed state 1/d.
Mat maximally_mixed_state(int d);

/// Builds a named family in dimension d.  `dominant_ratio` sets the weight
/// of the leading state relative to each remaining one for the two- and
/// three-state families (<= 0 picks the per-family default of 10 and 20);
/// the larger families are uniformly weighted and reject a ratio.
StateSet build_state_set(SetKind kind, int d, double dominant_ratio = 0.0);

/// Initial states embedded into the full Hilbert space.
std::vector<Mat> embedded_states(const StateSet& set,
                                 const SubspaceEmbedding& embedding);

/// Boundary costates sigma_i(T) = w_i / Tr[rho_i^2] * O rho_i O^dag, embedded
/// into the full space.  `logical_target` is the d x d gate.
std::vector<Mat> boundary_costates(const StateSet& set,
                                   const SubspaceEmbedding& embedding,
                                   const Mat& logical_target);

}  // namespace qgo

#endif  // QGO_STATE_SETS_HPP
