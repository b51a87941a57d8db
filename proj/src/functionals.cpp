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

#include "qgo/functionals.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qgo {
namespace {

void require_aligned(const StateSet& set, const std::vector<Mat>& finals) {
  if (finals.size() != set.states.size()) {
    throw std::invalid_argument("functional: finals do not match the state set");
  }
  for (const Mat& f : finals) {
    if (f.rows() != set.dim || f.cols() != set.dim) {
      throw std::invalid_argument("functional: final state dimension mismatch");
    }
  }
}

Mat apply_map(const Mat& map, const Mat& m) {
  return unvec_columns(map * vec_columns(m), static_cast<int>(m.rows()));
}

}  // namespace

double eval_j_t(const StateSet& set, const std::vector<Mat>& finals,
                const Mat& target, RVec* overlaps) {
  require_aligned(set, finals);
  require_unitary(target, "gate target");
  RVec terms(static_cast<Eigen::Index>(finals.size()));
  for (size_t i = 0; i < finals.size(); ++i) {
    const Mat& rho = set.states[i].mat();
    const Mat rotated = target * rho * target.adjoint();
    const double overlap = (rotated * finals[i]).trace().real();
    terms(static_cast<Eigen::Index>(i)) =
        set.weights[i] / set.states[i].purity() * overlap;
  }
  if (overlaps != nullptr) *overlaps = terms;
  return 1.0 - terms.sum();
}

double control_penalty(const ControlArray& pulse, const ControlArray& ref,
                       const RVec& shape_edges, double lambda_a, double dt) {
  if (pulse.rows() != ref.rows() || pulse.cols() != ref.cols()) {
    throw std::invalid_argument("penalty: pulse arrays not aligned");
  }
  if (shape_edges.size() < pulse.rows()) {
    throw std::invalid_argument("penalty: shape array shorter than the grid");
  }
  double sum = 0.0;
  for (Eigen::Index k = 0; k < pulse.rows(); ++k) {
    const double dev2 = (pulse.row(k) - ref.row(k)).squaredNorm();
    if (dev2 == 0.0) continue;
    if (shape_edges(k) <= 0.0) {
      throw std::invalid_argument(
          "penalty: nonzero control deviation where the shape vanishes");
    }
    sum += dev2 / shape_edges(k);
  }
  return lambda_a * sum * dt;
}

double eval_j_total(double j_t, const ControlArray& pulse,
                    const ControlArray& ref, const RVec& shape_edges,
                    double lambda_a, double dt) {
  return j_t + control_penalty(pulse, ref, shape_edges, lambda_a, dt);
}

double f_avg(const Mat& map, const Mat& target) {
  const int d = static_cast<int>(target.rows());
  if (map.rows() != d * d || map.cols() != d * d) {
    throw std::invalid_argument("f_avg: map does not match the target dimension");
  }
  require_unitary(target, "gate target");
  cxd sum = 0.0;
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      Mat unit = Mat::Zero(d, d);
      unit(i, j) = 1.0;
      const Mat evolved = apply_map(map, unit);
      const Mat back = target.adjoint() * evolved * target;
      sum += back(i, j);
    }
  }
  for (int j = 0; j < d; ++j) {
    const Mat evolved_jj = apply_map(map, projector(j, d));
    for (int i = 0; i < d; ++i) {
      const Mat rotated_ii = target * projector(i, d) * target.adjoint();
      sum += (rotated_ii * evolved_jj).trace();
    }
  }
  sum /= d * (d + 1.0);
  if (std::abs(sum.imag()) > numeric_policy.favg_imag) {
    throw std::runtime_error("f_avg: map produced a non-real fidelity");
  }
  return sum.real();
}

MonteCarloEstimate f_avg_monte_carlo(const Mat& map, const Mat& target,
                                     int n_samples, std::uint64_t seed) {
  const int d = static_cast<int>(target.rows());
  if (map.rows() != d * d || map.cols() != d * d) {
    throw std::invalid_argument("f_avg_monte_carlo: map/target mismatch");
  }
  if (n_samples < 100) {
    throw std::invalid_argument("f_avg_monte_carlo: need at least 100 samples");
  }
  require_unitary(target, "gate target");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int n = 0; n < n_samples; ++n) {
    Vec psi(d);
    for (int i = 0; i < d; ++i) psi(i) = cxd(gauss(rng), gauss(rng));
    psi.normalize();
    const Mat evolved = apply_map(map, Mat(psi * psi.adjoint()));
    const Vec ideal = target * psi;
    const double sample = (ideal.adjoint() * evolved * ideal).value().real();
    sum += sample;
    sum_sq += sample * sample;
  }
  MonteCarloEstimate est;
  est.mean = sum / n_samples;
  const double var =
      std::max(0.0, (sum_sq - n_samples * est.mean * est.mean) / (n_samples - 1.0));
  est.std_err = std::sqrt(var / n_samples);
  return est;
}

double eval_j_dist(const StateSet& set, const std::vector<Mat>& finals,
                   const Mat& target) {
  require_aligned(set, finals);
  require_unitary(target, "gate target");
  double sum = 0.0;
  for (size_t i = 0; i < finals.size(); ++i) {
    const Mat diff =
        target * set.states[i].mat() * target.adjoint() - finals[i];
    sum += (diff * diff).trace().real();
  }
  return sum;
}

}  // namespace qgo
