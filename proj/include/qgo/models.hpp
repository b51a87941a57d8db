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

#ifndef QGO_MODELS_HPP
#define QGO_MODELS_HPP

#include <string>
#include <vector>

#include "qgo/lindblad.hpp"
#include "qgo/operators.hpp"
#include "qgo/types.hpp"

namespace qgo {

/// Two rubidium atoms, four levels each {|0>, |1>, |i>, |r>}, driven by a
/// red (|0> <-> |i>) and a blue (|i> <-> |r>) laser in the two-color
/// rotating frame.  Frequencies are ordinary (not angular).
struct RydbergParams {
  double delta1_mhz = 600.0;  // single-photon detuning on |i>
  double delta2_mhz = 0.0;    // two-photon detuning on |r>
  double e1_ghz = 6.8;        // qubit splitting left in the rotating frame
  double u_mhz = 50.0;        // |rr> interaction shift
  double tau_ns = 25.0;       // intermediate-state lifetime
  double t_ns = 75.0;         // gate duration
};

/// Two transmon qubits sharing one microwave drive, in the frame rotating
/// at the drive frequency.  `levels` is the per-qubit truncation.
struct TransmonParams {
  double omega1_ghz = 4.3796;
  double omega2_ghz = 4.6137;
  double omega_d_ghz = 4.4985;
  double anharmonicity1_mhz = -239.3;
  double anharmonicity2_mhz = -242.8;
  double j_mhz = -2.3;
  double t1_1_us = 38.0;
  double t1_2_us = 32.0;
  double t2star_1_us = 29.5;
  double t2star_2_us = 16.0;
  int levels = 5;
  double t_ns = 400.0;
  double dissipation_scale = 1.0;
};

/// Groups the two real control channels carrying one complex drive
/// envelope, for pulse files and updates.
struct DrivePair {
  std::string label;
  int re_channel = 0;
  int im_channel = 0;
};

/// A ready-to-propagate system: Lindblad model, logical subspace, channel
/// grouping and the largest integrator substep that resolves the
/// off-diagonal dynamics.
struct ModelBundle {
  LindbladModel model;
  SubspaceEmbedding embedding{{0, 1}, 2};
  std::vector<DrivePair> drives;
  double max_substep_ns = 0.05;
};

ModelBundle build_rydberg(const RydbergParams& params);
ModelBundle build_transmon(const TransmonParams& params);

/// diag(1, 1, 1, e^{i chi}) on the logical two-qubit basis.
Mat cphase_target(double chi);

/// The perfect entangler that half-swaps |01> and |10> with relative
/// phase i.
Mat sqrt_iswap_target();

enum class GuessShape { kGaussian, kFlattop };

GuessShape parse_guess_shape(const std::string& name);
std::string guess_shape_name(GuessShape shape);

/// Real envelope sampled at interval midpoints.  Gaussian: centered at
/// T/2 with standard deviation `width_ns`.  Flattop: unit-shape plateau
/// with sin^2 ramps of `width_ns` on both ends.  Amplitude in rad/ns.
RVec guess_envelope(GuessShape shape, double amplitude, const TimeGrid& grid,
                    double width_ns);

}  // namespace qgo

#endif  // QGO_MODELS_HPP
