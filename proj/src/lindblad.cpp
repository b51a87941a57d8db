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

#include "qgo/lindblad.hpp"

#include <cmath>
#include <stdexcept>

namespace qgo {
namespace {

constexpr cxd kI{0.0, 1.0};

/// True when [diag(theta), A] = c A for a single scalar c and A^dag A is
/// diagonal, which together keep the dissipator invariant under the
/// diagonal rotating frame.
bool uniform_diagonal_shift(const RVec& theta, const Mat& a) {
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double theta_scale = std::max(1.0, theta.cwiseAbs().maxCoeff());
  bool have_shift = false;
  double shift = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (std::abs(a(i, j)) <= 1e-14 * scale) continue;
      const double s = theta(i) - theta(j);
      if (!have_shift) {
        shift = s;
        have_shift = true;
      } else if (std::abs(s - shift) > 1e-10 * theta_scale) {
        return false;
      }
    }
  }
  const Mat gram = a.adjoint() * a;
  const Mat offdiag = gram - Mat(gram.diagonal().asDiagonal());
  return offdiag.cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, gram.cwiseAbs().maxCoeff());
}

Mat phase_matrix(const RVec& theta, double s) {
  const int d = static_cast<int>(theta.size());
  Mat p(d, d);
  for (int b = 0; b < d; ++b) {
    for (int a = 0; a < d; ++a) {
      p(a, b) = std::exp(kI * ((theta(a) - theta(b)) * s));
    }
  }
  return p;
}

}  // namespace

void validate_model(const LindbladModel& model) {
  if (model.dim < 2) {
    throw std::invalid_argument("model: dimension must be >= 2");
  }
  if (model.h0.rows() != model.dim || model.h0.cols() != model.dim) {
    throw std::invalid_argument("model: drift dimension mismatch");
  }
  require_hermitian(model.h0, "model drift");
  if (model.control_names.size() != model.couplings.size()) {
    throw std::invalid_argument("model: one name per control channel required");
  }
  for (size_t c = 0; c < model.couplings.size(); ++c) {
    if (model.couplings[c].rows() != model.dim ||
        model.couplings[c].cols() != model.dim) {
      throw std::invalid_argument("model: coupling dimension mismatch");
    }
    require_hermitian(model.couplings[c], "control coupling " + model.control_names[c]);
  }
  for (const CollapseOp& op : model.collapse) {
    if (op.op.rows() != model.dim || op.op.cols() != model.dim) {
      throw std::invalid_argument("model: collapse dimension mismatch");
    }
    if (!(op.rate >= 0.0)) {
      throw std::invalid_argument("model: collapse rate must be >= 0");
    }
  }
}

Mat generator_apply(const LindbladModel& model, const RVec& controls,
                    const Mat& m) {
  Mat h = model.h0;
  for (size_t c = 0; c < model.couplings.size(); ++c) {
    h += controls(static_cast<Eigen::Index>(c)) * model.couplings[c];
  }
  Mat out = -kI * (h * m - m * h);
  for (const CollapseOp& cop : model.collapse) {
    if (cop.rate == 0.0) continue;
    const Mat am = cop.op * m;
    const Mat gram = cop.op.adjoint() * cop.op;
    out += cop.rate * (am * cop.op.adjoint() - 0.5 * (gram * m + m * gram));
  }
  return out;
}

Mat adjoint_generator_apply(const LindbladModel& model, const RVec& controls,
                            const Mat& s) {
  Mat h = model.h0;
  for (size_t c = 0; c < model.couplings.size(); ++c) {
    h += controls(static_cast<Eigen::Index>(c)) * model.couplings[c];
  }
  Mat out = kI * (h * s - s * h);
  for (const CollapseOp& cop : model.collapse) {
    if (cop.rate == 0.0) continue;
    const Mat gram = cop.op.adjoint() * cop.op;
    out += cop.rate * (cop.op.adjoint() * s * cop.op -
                       0.5 * (gram * s + s * gram));
  }
  return out;
}

IntervalStepper::IntervalStepper(const LindbladModel& model, double dt,
                                 int substeps)
    : dim_(model.dim), substeps_(substeps) {
  validate_model(model);
  if (!(dt > 0.0)) throw std::invalid_argument("stepper: dt must be positive");
  if (substeps_ < 1) throw std::invalid_argument("stepper: substeps must be >= 1");
  h_ = dt / substeps_;
  couplings_ = model.couplings;

  theta_ = model.h0.diagonal().real();
  ip_mode_ = true;
  for (const CollapseOp& op : model.collapse) {
    if (op.rate == 0.0) continue;
    if (!uniform_diagonal_shift(theta_, op.op)) {
      ip_mode_ = false;
      break;
    }
  }

  if (ip_mode_) {
    w_drift_ = model.h0;
    w_drift_.diagonal().setZero();
    phases_.reserve(2 * substeps_ + 1);
    for (int j = 0; j <= 2 * substeps_; ++j) {
      phases_.push_back(phase_matrix(theta_, 0.5 * j * h_));
    }
    rotate_back_ = phases_.back().conjugate();
  } else {
    theta_.setZero();
    w_drift_ = model.h0;
  }

  gmat_ = Mat::Zero(dim_, dim_);
  for (const CollapseOp& op : model.collapse) {
    if (op.rate == 0.0) continue;
    gmat_ += 0.5 * op.rate * (op.op.adjoint() * op.op);
    const double root = std::sqrt(op.rate);
    const double cutoff = 1e-14 * std::max(1.0, op.op.cwiseAbs().maxCoeff());
    JumpEntries entries;
    for (int j = 0; j < dim_; ++j) {
      for (int i = 0; i < dim_; ++i) {
        if (std::abs(op.op(i, j)) > cutoff) {
          entries.row.push_back(i);
          entries.col.push_back(j);
          entries.val.push_back(root * op.op(i, j));
        }
      }
    }
    jumps_.push_back(std::move(entries));
  }

  wsum_.resize(dim_, dim_);
  kmat_.resize(dim_, dim_);
  sin_.resize(dim_, dim_);
  k1_.resize(dim_, dim_);
  k2_.resize(dim_, dim_);
  k3_.resize(dim_, dim_);
  k4_.resize(dim_, dim_);
}

void IntervalStepper::load_control_sum(const RVec& controls) const {
  if (controls.size() != static_cast<Eigen::Index>(couplings_.size())) {
    throw std::invalid_argument("stepper: control channel count mismatch");
  }
  wsum_ = w_drift_;
  for (size_t c = 0; c < couplings_.size(); ++c) {
    wsum_ += controls(static_cast<Eigen::Index>(c)) * couplings_[c];
  }
}

void IntervalStepper::stage(int phase_index, const Mat& m, bool adjoint,
                            Mat& out) const {
  if (ip_mode_) {
    if (adjoint) {
      kmat_ = (-kI) * wsum_.cwiseProduct(phases_[phase_index]) + gmat_;
    } else {
      kmat_ = (-kI) * wsum_.cwiseProduct(phases_[phase_index]) - gmat_;
    }
  } else if (adjoint) {
    kmat_ = (-kI) * wsum_ + gmat_;
  } else {
    kmat_ = (-kI) * wsum_ - gmat_;
  }
  out.noalias() = kmat_ * m;
  out.noalias() += m * kmat_.adjoint();
  for (const JumpEntries& jump : jumps_) {
    const size_t n = jump.val.size();
    if (adjoint) {
      // out -= A^dag m A
      for (size_t a = 0; a < n; ++a) {
        const cxd va = std::conj(jump.val[a]);
        for (size_t b = 0; b < n; ++b) {
          out(jump.col[a], jump.col[b]) -=
              va * jump.val[b] * m(jump.row[a], jump.row[b]);
        }
      }
    } else {
      // out += A m A^dag
      for (size_t a = 0; a < n; ++a) {
        const cxd va = jump.val[a];
        for (size_t b = 0; b < n; ++b) {
          out(jump.row[a], jump.row[b]) +=
              va * std::conj(jump.val[b]) * m(jump.col[a], jump.col[b]);
        }
      }
    }
  }
}

Mat IntervalStepper::forward(const Mat& rho, const RVec& controls) const {
  load_control_sum(controls);
  Mat m = rho;
  for (int j = 0; j < substeps_; ++j) {
    stage(2 * j, m, false, k1_);
    sin_ = m + (0.5 * h_) * k1_;
    stage(2 * j + 1, sin_, false, k2_);
    sin_ = m + (0.5 * h_) * k2_;
    stage(2 * j + 1, sin_, false, k3_);
    sin_ = m + h_ * k3_;
    stage(2 * j + 2, sin_, false, k4_);
    m += (h_ / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
  }
  if (ip_mode_) m = m.cwiseProduct(rotate_back_);
  return m;
}

Mat IntervalStepper::backward(const Mat& sigma, const RVec& controls) const {
  load_control_sum(controls);
  Mat m = sigma;
  if (ip_mode_) m = m.cwiseProduct(phases_.back());
  for (int j = substeps_ - 1; j >= 0; --j) {
    stage(2 * j + 2, m, true, k1_);
    sin_ = m - (0.5 * h_) * k1_;
    stage(2 * j + 1, sin_, true, k2_);
    sin_ = m - (0.5 * h_) * k2_;
    stage(2 * j + 1, sin_, true, k3_);
    sin_ = m - h_ * k3_;
    stage(2 * j, sin_, true, k4_);
    m -= (h_ / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
  }
  return m;
}

namespace {

void require_control_shape(const IntervalStepper& stepper, const TimeGrid& grid,
                           const ControlArray& controls) {
  if (grid.nt < 1) throw std::invalid_argument("time grid: nt must be >= 1");
  if (controls.rows() != grid.nt ||
      controls.cols() != stepper.channels()) {
    throw std::invalid_argument("controls: expected nt x channels array");
  }
}

}  // namespace

Mat propagate(const IntervalStepper& stepper, const TimeGrid& grid,
              const ControlArray& controls, const Mat& rho0) {
  require_control_shape(stepper, grid, controls);
  Mat state = rho0;
  for (int k = 0; k < grid.nt; ++k) {
    state = stepper.forward(state, controls.row(k).transpose());
  }
  return state;
}

std::vector<Mat> propagate_forward(const IntervalStepper& stepper,
                                   const TimeGrid& grid,
                                   const ControlArray& controls,
                                   const Mat& rho0) {
  require_control_shape(stepper, grid, controls);
  std::vector<Mat> states;
  states.reserve(grid.nt + 1);
  states.push_back(rho0);
  for (int k = 0; k < grid.nt; ++k) {
    states.push_back(stepper.forward(states.back(), controls.row(k).transpose()));
  }
  return states;
}

std::vector<Mat> propagate_backward(const IntervalStepper& stepper,
                                    const TimeGrid& grid,
                                    const ControlArray& controls,
                                    const Mat& sigma_t) {
  require_control_shape(stepper, grid, controls);
  std::vector<Mat> costates(grid.nt + 1);
  costates[grid.nt] = sigma_t;
  for (int k = grid.nt - 1; k >= 0; --k) {
    costates[k] = stepper.backward(costates[k + 1], controls.row(k).transpose());
  }
  return costates;
}

TrajectoryHealth trajectory_health(const std::vector<Mat>& states) {
  if (states.empty()) {
    throw std::invalid_argument("trajectory_health: empty trajectory");
  }
  TrajectoryHealth health;
  health.min_eigenvalue = 1.0;
  for (const Mat& state : states) {
    health.max_trace_drift = std::max(
        health.max_trace_drift, std::abs(state.trace() - cxd(1.0, 0.0)));
    health.max_asymmetry = std::max(health.max_asymmetry, asymmetry(state));
  }
  // Eigenvalues only where it matters: start, middle, end.
  const size_t last = states.size() - 1;
  for (size_t k : {size_t{0}, last / 2, last}) {
    const Mat sym = 0.5 * (states[k] + states[k].adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Mat> solver(sym, Eigen::EigenvaluesOnly);
    health.min_eigenvalue =
        std::min(health.min_eigenvalue, solver.eigenvalues().minCoeff());
  }
  return health;
}

Mat dynamical_map(const IntervalStepper& stepper, const TimeGrid& grid,
                  const ControlArray& controls,
                  const SubspaceEmbedding& embedding) {
  const int d = embedding.logical_dim();
  Mat map(d * d, d * d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      Mat unit = Mat::Zero(d, d);
      unit(i, j) = 1.0;
      const Mat evolved =
          embedding.extract(propagate(stepper, grid, controls, embedding.embed(unit)));
      map.col(i + j * d) = vec_columns(evolved);
    }
  }
  return map;
}

}  // namespace qgo
