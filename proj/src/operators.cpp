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

#include "qgo/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qgo {

double asymmetry(const Mat& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs(const Mat& a) { return a.cwiseAbs().maxCoeff(); }

void require_hermitian(const Mat& a, const std::string& what, double tol) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument(what + ": not square");
  }
  const double scale = std::max(1.0, max_abs(a));
  const double asym = asymmetry(a);
  if (asym > tol * scale) {
    throw std::invalid_argument(what + ": not Hermitian, |A - A^dag| = " +
                                std::to_string(asym));
  }
}

void require_unitary(const Mat& u, const std::string& what, double tol) {
  if (u.rows() != u.cols()) {
    throw std::invalid_argument(what + ": not square");
  }
  const Mat gram = u.adjoint() * u;
  const double dev =
      (gram - Mat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
  if (dev > tol) {
    throw std::invalid_argument(what + ": not unitary, |U^dag U - 1| = " +
                                std::to_string(dev));
  }
}

cxd hs_overlap(const Mat& a, const Mat& b) {
  return (a.adjoint() * b).trace();
}

RVec hermitian_spectrum(const Mat& a) {
  require_hermitian(a, "hermitian_spectrum argument");
  Eigen::SelfAdjointEigenSolver<Mat> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_spectrum: eigensolver failed");
  }
  RVec eigs = solver.eigenvalues();
  const double drift = std::abs(eigs.sum() - a.trace().real());
  if (drift > numeric_policy.spectrum_sum * std::max(1.0, max_abs(a))) {
    throw std::runtime_error("hermitian_spectrum: eigenvalue sum drifted from trace");
  }
  return eigs;
}

Vec vec_columns(const Mat& a) {
  return Eigen::Map<const Vec>(a.data(), a.size());
}

Mat unvec_columns(const Vec& v, int rows) {
  if (v.size() % rows != 0) {
    throw std::invalid_argument("unvec_columns: size not divisible by rows");
  }
  return Eigen::Map<const Mat>(v.data(), rows,
                               static_cast<int>(v.size()) / rows);
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Mat projector(int i, int d) {
  Mat p = Mat::Zero(d, d);
  p(i, i) = 1.0;
  return p;
}

DensityMatrix::DensityMatrix(Mat rho) : rho_(std::move(rho)) {
  require_hermitian(rho_, "density matrix");
  const double tr_err = std::abs(rho_.trace() - cxd(1.0, 0.0));
  if (tr_err > numeric_policy.trace_one) {
    throw std::invalid_argument("density matrix: trace deviates from 1 by " +
                                std::to_string(tr_err));
  }
  // Symmetrize before the eigendecomposition so the validated object is
  // exactly Hermitian.
  rho_ = 0.5 * (rho_ + rho_.adjoint().eval());
  const RVec eigs = hermitian_spectrum(rho_);
  if (eigs.minCoeff() < numeric_policy.positivity_floor) {
    throw std::invalid_argument("density matrix: negative eigenvalue " +
                                std::to_string(eigs.minCoeff()));
  }
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

SubspaceEmbedding::SubspaceEmbedding(std::vector<int> levels, int full_dim)
    : levels_(std::move(levels)), full_dim_(full_dim) {
  if (levels_.empty()) {
    throw std::invalid_argument("subspace embedding: no levels given");
  }
  std::vector<int> sorted = levels_;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= full_dim_) {
      throw std::invalid_argument("subspace embedding: level out of range");
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw std::invalid_argument("subspace embedding: duplicate level");
    }
  }
}

Mat SubspaceEmbedding::embed(const Mat& logical) const {
  const int d = logical_dim();
  if (logical.rows() != d || logical.cols() != d) {
    throw std::invalid_argument("embed: operator does not match subspace");
  }
  Mat full = Mat::Zero(full_dim_, full_dim_);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      full(levels_[i], levels_[j]) = logical(i, j);
    }
  }
  return full;
}

Mat SubspaceEmbedding::extract(const Mat& full) const {
  if (full.rows() != full_dim_ || full.cols() != full_dim_) {
    throw std::invalid_argument("extract: operator does not match full space");
  }
  const int d = logical_dim();
  Mat logical(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      logical(i, j) = full(levels_[i], levels_[j]);
    }
  }
  return logical;
}

}  // namespace qgo
