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

#include "qgo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qgo {
namespace {

void require_rank_one_projector(const Mat& p, const std::string& what) {
  require_hermitian(p, what);
  if (std::abs(p.trace() - cxd(1.0, 0.0)) > 1e-9 ||
      (p * p - p).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::invalid_argument(what + ": not a one-dimensional projector");
  }
}

double purity_of(const Mat& m) { return (m * m).trace().real(); }

/// Isolated-eigenvalue projectors of a Hermitian state.
std::vector<Mat> isolated_eigenprojectors(const Mat& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(rho);
  const RVec eigs = solver.eigenvalues();
  std::vector<Mat> projectors;
  for (Eigen::Index k = 0; k < eigs.size(); ++k) {
    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < eigs.size(); ++j) {
      if (j != k) gap = std::min(gap, std::abs(eigs(k) - eigs(j)));
    }
    if (gap > numeric_policy.eigengap) {
      const Vec v = solver.eigenvectors().col(k);
      projectors.push_back(v * v.adjoint());
    }
  }
  return projectors;
}

bool orthogonal(const Mat& a, const Mat& b) {
  return (a * b).norm() <= 1e-8;
}

}  // namespace

Channel make_channel(Mat superop) {
  if (superop.rows() != superop.cols()) {
    throw std::invalid_argument("channel: superoperator must be square");
  }
  const int d = static_cast<int>(std::llround(std::sqrt(double(superop.rows()))));
  if (static_cast<Eigen::Index>(d) * d != superop.rows()) {
    throw std::invalid_argument("channel: size is not a perfect square");
  }
  return Channel{d, std::move(superop)};
}

Channel unitary_channel(const Mat& u) {
  require_unitary(u, "channel unitary");
  return make_channel(kron(u.conjugate(), u));
}

Channel mixture_channel(const std::vector<Mat>& unitaries, const RVec& weights) {
  if (unitaries.empty() ||
      weights.size() != static_cast<Eigen::Index>(unitaries.size())) {
    throw std::invalid_argument("mixture channel: weights/unitaries mismatch");
  }
  if (weights.minCoeff() < 0.0 || weights.sum() <= 0.0) {
    throw std::invalid_argument("mixture channel: weights must be non-negative");
  }
  const int d = static_cast<int>(unitaries.front().rows());
  Mat superop = Mat::Zero(d * d, d * d);
  const double total = weights.sum();
  for (size_t i = 0; i < unitaries.size(); ++i) {
    require_unitary(unitaries[i], "mixture member");
    superop += weights(static_cast<Eigen::Index>(i)) / total *
               kron(unitaries[i].conjugate(), unitaries[i]);
  }
  return make_channel(std::move(superop));
}

Mat channel_apply(const Channel& ch, const Mat& m) {
  if (m.rows() != ch.dim || m.cols() != ch.dim) {
    throw std::invalid_argument("channel: operand dimension mismatch");
  }
  return unvec_columns(ch.superop * vec_columns(m), ch.dim);
}

bool is_trace_preserving(const Channel& ch, double tol) {
  const int d = ch.dim;
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      Mat unit = Mat::Zero(d, d);
      unit(i, j) = 1.0;
      const cxd tr = channel_apply(ch, unit).trace();
      const cxd expected = i == j ? cxd(1.0, 0.0) : cxd(0.0, 0.0);
      if (std::abs(tr - expected) > tol) return false;
    }
  }
  return true;
}

Mat choi_matrix(const Channel& ch) {
  const int d = ch.dim;
  Mat choi = Mat::Zero(d * d, d * d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      Mat unit = Mat::Zero(d, d);
      unit(i, j) = 1.0;
      choi.block(i * d, j * d, d, d) = channel_apply(ch, unit);
    }
  }
  return choi;
}

bool is_totally_rotated(const Mat& p, const std::vector<Mat>& basis,
                        double floor) {
  require_rank_one_projector(p, "totally-rotated candidate");
  if (basis.empty()) {
    throw std::invalid_argument("totally-rotated check: empty basis");
  }
  for (size_t i = 0; i < basis.size(); ++i) {
    require_rank_one_projector(basis[i], "basis projector");
    for (size_t j = i + 1; j < basis.size(); ++j) {
      if (!orthogonal(basis[i], basis[j])) {
        throw std::invalid_argument("totally-rotated check: basis not orthogonal");
      }
    }
  }
  for (const Mat& b : basis) {
    if ((p * b).norm() <= floor) return false;
  }
  return true;
}

bool is_complete_totally_rotating(const std::vector<DensityMatrix>& states) {
  if (states.empty()) return false;
  const int d = states.front().dim();

  std::vector<Mat> collected;
  std::vector<Mat> basis;
  for (const DensityMatrix& state : states) {
    std::vector<Mat> own = isolated_eigenprojectors(state.mat());
    // A state with a fully non-degenerate spectrum supplies the complete
    // orthogonal basis by itself.
    if (basis.empty() && static_cast<int>(own.size()) == d) basis = own;
    collected.insert(collected.end(), own.begin(), own.end());
  }
  if (basis.empty()) {
    for (const Mat& candidate : collected) {
      const bool fits = std::all_of(basis.begin(), basis.end(),
                                    [&](const Mat& b) { return orthogonal(candidate, b); });
      if (fits) basis.push_back(candidate);
      if (static_cast<int>(basis.size()) == d) break;
    }
  }
  if (static_cast<int>(basis.size()) != d) return false;

  for (const Mat& candidate : collected) {
    const bool rotated =
        std::all_of(basis.begin(), basis.end(), [&](const Mat& b) {
          return (candidate * b).norm() > numeric_policy.rotated_floor;
        });
    if (rotated) return true;
  }
  return false;
}

bool spectrum_invariant(const Channel& ch, const Mat& rho, double tol) {
  const RVec before = hermitian_spectrum(rho);
  Mat image = channel_apply(ch, rho);
  image = 0.5 * (image + image.adjoint().eval());
  const RVec after = hermitian_spectrum(image);
  return (before - after).cwiseAbs().maxCoeff() <= tol;
}

bool is_unital(const Channel& ch, double tol) {
  const Mat mixed = Mat::Identity(ch.dim, ch.dim) / double(ch.dim);
  return (channel_apply(ch, mixed) - mixed).norm() <= tol;
}

bool channel_is_unitary(const Channel& ch) {
  if (!is_trace_preserving(ch)) {
    throw std::invalid_argument("unitarity test: channel is not trace-preserving");
  }
  Mat choi = choi_matrix(ch);
  if (asymmetry(choi) > 1e-8 * std::max(1.0, max_abs(choi))) {
    throw std::invalid_argument("unitarity test: channel is not Hermiticity-preserving");
  }
  choi = 0.5 * (choi + choi.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Mat> solver(choi, Eigen::EigenvaluesOnly);
  const RVec eigs = solver.eigenvalues();
  if (eigs.minCoeff() < numeric_policy.choi_positivity) {
    throw std::invalid_argument("unitarity test: channel is not completely positive");
  }
  const Eigen::Index top = eigs.size() - 1;
  if (std::abs(eigs(top) - ch.dim) > numeric_policy.choi_unitary) return false;
  for (Eigen::Index k = 0; k < top; ++k) {
    if (std::abs(eigs(k)) > numeric_policy.choi_unitary) return false;
  }
  return true;
}

Mat haar_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat g(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) g(i, j) = cxd(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase gauge so the distribution is Haar.
  for (int j = 0; j < d; ++j) {
    const cxd rjj = r(j, j);
    q.col(j) *= rjj / std::abs(rjj);
  }
  return q;
}

Channel random_kraus_channel(int d, int n_kraus, std::mt19937_64& rng) {
  if (n_kraus < 1) {
    throw std::invalid_argument("random channel: need at least one Kraus term");
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Mat> raw;
  Mat gram = Mat::Zero(d, d);
  for (int n = 0; n < n_kraus; ++n) {
    Mat g(d, d);
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < d; ++i) g(i, j) = cxd(gauss(rng), gauss(rng));
    }
    raw.push_back(g);
    gram += g.adjoint() * g;
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(gram);
  const Mat normalizer = solver.operatorInverseSqrt();
  Mat superop = Mat::Zero(d * d, d * d);
  for (const Mat& g : raw) {
    const Mat k = g * normalizer;
    superop += kron(k.conjugate(), k);
  }
  return make_channel(std::move(superop));
}

namespace {

struct SampleRoutes {
  bool oracle = false;
  bool route_spectrum = false;
  bool route_projectors = false;
};

SampleRoutes classify(const Channel& ch, const Mat& rho1, const Mat& rho2,
                      const std::vector<Mat>& canonical, const Mat& rotated) {
  SampleRoutes r;
  r.oracle = channel_is_unitary(ch);
  r.route_spectrum = is_unital(ch) && spectrum_invariant(ch, rho1) &&
                     spectrum_invariant(ch, rho2);

  // Projector-image route: all canonical projectors map to mutually
  // orthogonal one-dimensional projectors and the totally rotated
  // projector maps to a one-dimensional projector.
  std::vector<Mat> images;
  images.reserve(canonical.size());
  bool pure = true;
  for (const Mat& p : canonical) {
    Mat img = channel_apply(ch, p);
    img = 0.5 * (img + img.adjoint().eval());
    if (std::abs(purity_of(img) - 1.0) > numeric_policy.spectrum_invariant) {
      pure = false;
      break;
    }
    images.push_back(img);
  }
  if (pure) {
    for (size_t i = 0; i < images.size() && pure; ++i) {
      for (size_t j = i + 1; j < images.size(); ++j) {
        if ((images[i] * images[j]).norm() > numeric_policy.spectrum_invariant) {
          pure = false;
          break;
        }
      }
    }
  }
  if (pure) {
    Mat img = channel_apply(ch, rotated);
    img = 0.5 * (img + img.adjoint().eval());
    pure = std::abs(purity_of(img) - 1.0) <= numeric_policy.spectrum_invariant;
  }
  r.route_projectors = pure;
  return r;
}

}  // namespace

BatteryReport run_verification_battery(const BatteryOptions& options) {
  BatteryReport report;
  if (options.samples_per_dim == 0) {
    report.vacuous = true;
    report.all_pass = true;
    report.rows.push_back({"random-channel-equivalence", 0, true,
                           "no samples requested; vacuous pass"});
    return report;
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> n_members(1, 4);
  std::uniform_real_distribution<double> weight(0.1, 1.0);

  for (int d : options.dims) {
    const Mat rho1 = ordered_spectrum_state(d);
    const Mat rho2 = totally_rotated_state(d);
    std::vector<Mat> canonical;
    for (int i = 0; i < d; ++i) canonical.push_back(projector(i, d));

    BatteryRow spectrum_row{"unitality-spectrum-route-d" + std::to_string(d), 0,
                            true, ""};
    BatteryRow projector_row{"projector-image-route-d" + std::to_string(d),
                             0, true, ""};
    for (int s = 0; s < options.samples_per_dim; ++s) {
      // Every fourth sample is a pure unitary so both outcomes stay
      // represented.
      const int members = (s % 4 == 0) ? 1 : n_members(rng);
      std::vector<Mat> unitaries;
      RVec weights(members);
      for (int m = 0; m < members; ++m) {
        unitaries.push_back(haar_unitary(d, rng));
        weights(m) = weight(rng);
      }
      const Channel ch = mixture_channel(unitaries, weights);
      const SampleRoutes routes = classify(ch, rho1, rho2, canonical, rho2);
      spectrum_row.checked++;
      projector_row.checked++;
      if (routes.route_spectrum != routes.oracle) {
        spectrum_row.pass = false;
        spectrum_row.detail = "disagreement at sample " + std::to_string(s);
      }
      if (routes.route_projectors != routes.oracle) {
        projector_row.pass = false;
        projector_row.detail = "disagreement at sample " + std::to_string(s);
      }
    }
    if (spectrum_row.pass) spectrum_row.detail = "all samples agree with the Choi oracle";
    if (projector_row.pass) projector_row.detail = "all samples agree with the Choi oracle";
    report.rows.push_back(spectrum_row);
    report.rows.push_back(projector_row);

    BatteryRow set_row{"set-properties-d" + std::to_string(d), 3, true, ""};
    const std::vector<DensityMatrix> pair = {DensityMatrix(rho1),
                                             DensityMatrix(rho2)};
    const std::vector<DensityMatrix> mixed_only = {
        DensityMatrix(maximally_mixed_state(d))};
    const std::vector<DensityMatrix> diagonal_only = {DensityMatrix(rho1)};
    if (!is_complete_totally_rotating(pair)) {
      set_row.pass = false;
      set_row.detail = "{rho1, rho2} not recognized";
    } else if (is_complete_totally_rotating(mixed_only)) {
      set_row.pass = false;
      set_row.detail = "maximally mixed state alone accepted";
    } else if (is_complete_totally_rotating(diagonal_only)) {
      set_row.pass = false;
      set_row.detail = "diagonal state alone accepted";
    } else {
      set_row.detail = "completeness and rotation checks hold";
    }
    report.rows.push_back(set_row);
  }

  report.all_pass = std::all_of(report.rows.begin(), report.rows.end(),
                                [](const BatteryRow& r) { return r.pass; });
  return report;
}

}  // namespace qgo
