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

#ifndef QGO_OPERATORS_HPP
#define QGO_OPERATORS_HPP

#include <string>
#include <vector>

#include "qgo/types.hpp"

namespace qgo {

/// Largest absolute entry of A - A^dag.
double asymmetry(const Mat& a);

/// Largest absolute entry.
double max_abs(const Mat& a);

/// Throws std::invalid_argument when A deviates from Hermiticity by more than
/// tol relative to max(1, max|A|).  `what` names the offender in the message.
void require_hermitian(const Mat& a, const std::string& what,
                       double tol = numeric_policy.hermiticity);

/// Throws std::invalid_argument unless U^dag U = 1 within the policy bound.
void require_unitary(const Mat& u, const std::string& what,
                     double tol = numeric_policy.unitarity);

/// Hilbert-Schmidt inner product Tr(A^dag B).
cxd hs_overlap(const Mat& a, const Mat& b);

/// Ascending eigenvalues of a Hermitian operator.  Validates Hermiticity and
/// that the eigenvalue sum reproduces the trace.
RVec hermitian_spectrum(const Mat& a);

/// Column-stacking of a matrix into a vector and its inverse.
Vec vec_columns(const Mat& a);
Mat unvec_columns(const Vec& v, int rows);

/// Kronecker product.
Mat kron(const Mat& a, const Mat& b);

/// |i><i| in dimension d.
Mat projector(int i, int d);

/// A density matrix validated at construction: Hermitian, unit trace and
/// positive semidefinite within the shared numeric policy.
class DensityMatrix {
 public:
  /// Validates and stores.  Throws std::invalid_argument on violation.
  explicit DensityMatrix(Mat rho);

  const Mat& mat() const { return rho_; }
  int dim() const { return static_cast<int>(rho_.rows()); }
  double purity() const;

 private:
  Mat rho_;
};

/// Maps operators on a logical subspace into a larger Hilbert space and back.
/// The subspace is spanned by a list of computational levels of the full
/// space; embedded operators vanish outside it.
class SubspaceEmbedding {
 public:
  /// `levels` lists the full-space index of each logical basis state, in
  /// logical order.  Indices must be distinct and within [0, full_dim).
  SubspaceEmbedding(std::vector<int> levels, int full_dim);

  int logical_dim() const { return static_cast<int>(levels_.size()); }
  int full_dim() const { return full_dim_; }
  const std::vector<int>& levels() const { return levels_; }

  /// Logical (d x d) -> full (D x D), zero outside the subspace.
  Mat embed(const Mat& logical) const;

  /// Full (D x D) -> logical (d x d) restriction.
  Mat extract(const Mat& full) const;

 private:
  std::vector<int> levels_;
  int full_dim_;
};

}  // namespace qgo

#endif  // QGO_OPERATORS_HPP
