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

#include "qgo/models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qgo/units.hpp"

namespace qgo {
namespace {

// Stage sampling of the rotating-frame phases stays accurate while
// (fastest phase rate) * (substep) <= kMaxPhasePerStep.
constexpr double kMaxPhasePerStep = 0.08;

Mat lowering(int n) {
  Mat b = Mat::Zero(n, n);
  for (int i = 1; i < n; ++i) b(i - 1, i) = std::sqrt(static_cast<double>(i));
  return b;
}

Mat one_atom_op(const Mat& a, int atom, int dim_single) {
  const Mat id = Mat::Identity(dim_single, dim_single);
  return atom == 0 ? kron(a, id) : kron(id, a);
}

}  // namespace

ModelBundle build_rydberg(const RydbergParams& params) {
  if (!(params.tau_ns > 0.0)) {
    throw std::invalid_argument("rydberg: lifetime tau must be positive");
  }
  // Single-atom basis {|0>, |1>, |i>, |r>}; |1> carries only its energy and
  // couples to nothing, which is what restricts reachable gates to
  // diagonal ones.
  const int ds = 4;
  const double d1 = mhz(params.delta1_mhz);
  const double d2 = mhz(params.delta2_mhz);

  Mat h_atom = Mat::Zero(ds, ds);
  h_atom(1, 1) = ghz(params.e1_ghz);
  h_atom(2, 2) = d1;
  h_atom(3, 3) = d2;

  Mat x_red = Mat::Zero(ds, ds);
  x_red(0, 2) = 0.5;
  x_red(2, 0) = 0.5;
  Mat y_red = Mat::Zero(ds, ds);
  y_red(0, 2) = cxd(0.0, -0.5);
  y_red(2, 0) = cxd(0.0, 0.5);
  Mat x_blue = Mat::Zero(ds, ds);
  x_blue(2, 3) = 0.5;
  x_blue(3, 2) = 0.5;
  Mat y_blue = Mat::Zero(ds, ds);
  y_blue(2, 3) = cxd(0.0, -0.5);
  y_blue(3, 2) = cxd(0.0, 0.5);

  Mat decay = Mat::Zero(ds, ds);
  decay(0, 2) = 1.0;  // |0><i|

  ModelBundle bundle;
  bundle.model.dim = ds * ds;
  bundle.model.h0 =
      one_atom_op(h_atom, 0, ds) + one_atom_op(h_atom, 1, ds);
  bundle.model.h0(15, 15) -= mhz(params.u_mhz);  // -U |rr><rr|

  for (const Mat& op : {x_red, y_red, x_blue, y_blue}) {
    bundle.model.couplings.push_back(one_atom_op(op, 0, ds) +
                                     one_atom_op(op, 1, ds));
  }
  bundle.model.control_names = {"omega_red_re", "omega_red_im",
                                "omega_blue_re", "omega_blue_im"};
  const double rate = 1.0 / params.tau_ns;
  bundle.model.collapse.push_back(
      {one_atom_op(decay, 0, ds), rate, "decay_atom1"});
  bundle.model.collapse.push_back(
      {one_atom_op(decay, 1, ds), rate, "decay_atom2"});

  bundle.embedding = SubspaceEmbedding({0, 1, 4, 5}, bundle.model.dim);
  bundle.drives = {{"omega_red", 0, 1}, {"omega_blue", 2, 3}};

  const double fastest =
      std::max({std::abs(d1), std::abs(d2 - d1), 1.0});
  bundle.max_substep_ns = kMaxPhasePerStep / fastest;
  return bundle;
}

ModelBundle build_transmon(const TransmonParams& params) {
  if (params.levels < 3) {
    throw std::invalid_argument("transmon: need at least 3 levels per qubit");
  }
  const int n = params.levels;
  const Mat b = lowering(n);
  const Mat num = b.adjoint() * b;

  const double det1 = ghz(params.omega1_ghz) - ghz(params.omega_d_ghz);
  const double det2 = ghz(params.omega2_ghz) - ghz(params.omega_d_ghz);
  const double anh1 = mhz(params.anharmonicity1_mhz);
  const double anh2 = mhz(params.anharmonicity2_mhz);

  auto qubit_drift = [&](double det, double anh) {
    return Mat((det - 0.5 * anh) * num + 0.5 * anh * (num * num));
  };

  ModelBundle bundle;
  bundle.model.dim = n * n;
  bundle.model.h0 =
      one_atom_op(qubit_drift(det1, anh1), 0, n) +
      one_atom_op(qubit_drift(det2, anh2), 1, n) +
      mhz(params.j_mhz) *
          (kron(b.adjoint(), b) + kron(b, Mat(b.adjoint())));

  const Mat b1 = one_atom_op(b, 0, n);
  const Mat b2 = one_atom_op(b, 1, n);
  bundle.model.couplings.push_back(
      0.5 * (b1 + b1.adjoint() + b2 + b2.adjoint()));
  bundle.model.couplings.push_back(
      cxd(0.0, 0.5) * (b1 - b1.adjoint() + b2 - b2.adjoint()));
  bundle.model.control_names = {"omega_re", "omega_im"};

  const double scale = params.dissipation_scale;
  if (!(scale >= 0.0)) {
    throw std::invalid_argument("transmon: dissipation scale must be >= 0");
  }
  const double gamma[2] = {rate_from_us(params.t1_1_us),
                           rate_from_us(params.t1_2_us)};
  const double gamma_phi[2] = {rate_from_us(params.t2star_1_us),
                               rate_from_us(params.t2star_2_us)};
  for (int q = 0; q < 2; ++q) {
    for (int i = 1; i < n; ++i) {
      Mat drop = Mat::Zero(n, n);
      drop(i - 1, i) = 1.0;
      bundle.model.collapse.push_back(
          {one_atom_op(drop, q, n), i * gamma[q] * scale,
           "decay_q" + std::to_string(q + 1) + "_" + std::to_string(i)});
    }
    for (int i = 0; i < n; ++i) {
      Mat level = Mat::Zero(n, n);
      level(i, i) = 1.0;
      bundle.model.collapse.push_back(
          {one_atom_op(level, q, n), std::sqrt(double(i)) * gamma_phi[q] * scale,
           "dephase_q" + std::to_string(q + 1) + "_" + std::to_string(i)});
    }
  }

  bundle.embedding = SubspaceEmbedding({0, 1, n, n + 1}, bundle.model.dim);
  bundle.drives = {{"omega", 0, 1}};

  // Fastest rotating-frame phase on a drive-coupled transition:
  // theta(i+1) - theta(i) = det + anh * i.
  double fastest = 1.0;
  const double det[2] = {det1, det2};
  const double anh[2] = {anh1, anh2};
  for (int q = 0; q < 2; ++q) {
    for (int i = 0; i + 1 < n; ++i) {
      fastest = std::max(fastest, std::abs(det[q] + anh[q] * i));
    }
  }
  bundle.max_substep_ns = kMaxPhasePerStep / fastest;
  return bundle;
}

Mat cphase_target(double chi) {
  Mat o = Mat::Identity(4, 4);
  o(3, 3) = std::exp(cxd(0.0, chi));
  return o;
}

Mat sqrt_iswap_target() {
  Mat o = Mat::Identity(4, 4);
  const double r = 1.0 / std::sqrt(2.0);
  o(1, 1) = r;
  o(1, 2) = cxd(0.0, r);
  o(2, 1) = cxd(0.0, r);
  o(2, 2) = r;
  return o;
}

GuessShape parse_guess_shape(const std::string& name) {
  if (name == "gaussian") return GuessShape::kGaussian;
  if (name == "flattop") return GuessShape::kFlattop;
  throw std::invalid_argument("unknown guess shape: " + name);
}

std::string guess_shape_name(GuessShape shape) {
  return shape == GuessShape::kGaussian ? "gaussian" : "flattop";
}

RVec guess_envelope(GuessShape shape, double amplitude, const TimeGrid& grid,
                    double width_ns) {
  if (!(amplitude >= 0.0)) {
    throw std::invalid_argument("guess: amplitude must be >= 0");
  }
  if (!(width_ns > 0.0)) {
    throw std::invalid_argument("guess: width must be positive");
  }
  RVec env(grid.nt);
  const double t_total = grid.t_total;
  for (int k = 0; k < grid.nt; ++k) {
    const double t = grid.midpoint(k);
    if (shape == GuessShape::kGaussian) {
      const double x = (t - 0.5 * t_total) / width_ns;
      env(k) = amplitude * std::exp(-0.5 * x * x);
    } else {
      double v = 1.0;
      if (t < width_ns) {
        const double s = std::sin(0.5 * M_PI * t / width_ns);
        v = s * s;
      } else if (t > t_total - width_ns) {
        const double s = std::sin(0.5 * M_PI * (t_total - t) / width_ns);
        v = s * s;
      }
      env(k) = amplitude * v;
    }
  }
  return env;
}

}  // namespace qgo
