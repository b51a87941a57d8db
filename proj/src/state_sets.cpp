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

#include "qgo/state_sets.hpp"

#include <cmath>
#include <stdexcept>

namespace qgo {
namespace {

Mat pure_state(const Vec& v) { return v * v.adjoint(); }

/// d = 4 only: projectors onto (1/2)(|0> +- |1> +- |2> +- |3>) with the four
/// sign patterns that make the family mutually unbiased with the canonical
/// basis and orthonormal among themselves.
std::vector<Mat> mub_partners_dim4() {
  const double signs[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  std::vector<Mat> out;
  for (const auto& row : signs) {
    Vec v(4);
    for (int i = 0; i < 4; ++i) v(i) = 0.5 * row[i];
    out.push_back(pure_state(v));
  }
  return out;
}

void append_uniform_weights(StateSet& set) {
  set.weights.assign(set.states.size(), 1.0 / set.states.size());
}

}  // namespace

SetKind parse_set_kind(const std::string& name) {
  if (name == "diagonal-2") return SetKind::kDiagonal2;
  if (name == "minimal-3") return SetKind::kMinimal3;
  if (name == "extended") return SetKind::kExtended;
  if (name == "mub-2d") return SetKind::kMub2d;
  if (name == "full-basis") return SetKind::kFullBasis;
  throw std::invalid_argument("unknown state set kind: " + name);
}

std::string set_kind_name(SetKind kind) {
  switch (kind) {
    case SetKind::kDiagonal2: return "diagonal-2";
    case SetKind::kMinimal3: return "minimal-3";
    case SetKind::kExtended: return "extended";
    case SetKind::kMub2d: return "mub-2d";
    case SetKind::kFullBasis: return "full-basis";
  }
  throw std::logic_error("unreachable set kind");
}

std::vector<SetKind> all_set_kinds() {
  return {SetKind::kDiagonal2, SetKind::kMinimal3, SetKind::kExtended,
          SetKind::kMub2d, SetKind::kFullBasis};
}

Mat ordered_spectrum_state(int d) {
  Mat rho = Mat::Zero(d, d);
  for (int i = 1; i <= d; ++i) {
    rho(i - 1, i - 1) = 2.0 * (d - i + 1) / (d * (d + 1.0));
  }
  return rho;
}

Mat totally_rotated_state(int d) {
  return Mat::Constant(d, d, cxd(1.0 / d, 0.0));
}

Mat maximally_mixed_state(int d) {
  return Mat::Identity(d, d) / static_cast<double>(d);
}

StateSet build_state_set(SetKind kind, int d, double dominant_ratio) {
  if (d < 2) throw std::invalid_argument("state set: dimension must be >= 2");
  const bool ratio_given = dominant_ratio > 0.0;
  StateSet set;
  set.kind = kind;
  set.dim = d;
  switch (kind) {
    case SetKind::kDiagonal2: {
      const double r = ratio_given ? dominant_ratio : 10.0;
      set.states.emplace_back(totally_rotated_state(d));
      set.states.emplace_back(maximally_mixed_state(d));
      set.weights = {r / (r + 1.0), 1.0 / (r + 1.0)};
      break;
    }
    case SetKind::kMinimal3: {
      const double r = ratio_given ? dominant_ratio : 20.0;
      set.states.emplace_back(ordered_spectrum_state(d));
      set.states.emplace_back(totally_rotated_state(d));
      set.states.emplace_back(maximally_mixed_state(d));
      set.weights = {r / (r + 2.0), 1.0 / (r + 2.0), 1.0 / (r + 2.0)};
      break;
    }
    case SetKind::kExtended: {
      if (ratio_given) {
        throw std::invalid_argument(
            "state set: extended family is uniformly weighted");
      }
      for (int i = 0; i < d; ++i) set.states.emplace_back(projector(i, d));
      set.states.emplace_back(totally_rotated_state(d));
      append_uniform_weights(set);
      break;
    }
    case SetKind::kMub2d: {
      if (ratio_given) {
        throw std::invalid_argument(
            "state set: mub-2d family is uniformly weighted");
      }
      if (d != 4) {
        throw std::invalid_argument(
            "state set: mub-2d is defined for dimension 4");
      }
      for (int i = 0; i < d; ++i) set.states.emplace_back(projector(i, d));
      for (const Mat& p : mub_partners_dim4()) set.states.emplace_back(p);
      append_uniform_weights(set);
      break;
    }
    case SetKind::kFullBasis: {
      if (ratio_given) {
        throw std::invalid_argument(
            "state set: full-basis family is uniformly weighted");
      }
      for (int i = 0; i < d; ++i) set.states.emplace_back(projector(i, d));
      for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
          Vec plus = Vec::Zero(d);
          plus(i) = 1.0 / std::sqrt(2.0);
          plus(j) = 1.0 / std::sqrt(2.0);
          set.states.emplace_back(pure_state(plus));
          Vec phased = Vec::Zero(d);
          phased(i) = 1.0 / std::sqrt(2.0);
          phased(j) = cxd(0.0, 1.0 / std::sqrt(2.0));
          set.states.emplace_back(pure_state(phased));
        }
      }
      append_uniform_weights(set);
      break;
    }
  }
  return set;
}

std::vector<Mat> embedded_states(const StateSet& set,
                                 const SubspaceEmbedding& embedding) {
  if (embedding.logical_dim() != set.dim) {
    throw std::invalid_argument("embedded_states: dimension mismatch");
  }
  std::vector<Mat> out;
  out.reserve(set.states.size());
  for (const DensityMatrix& rho : set.states) {
    out.push_back(embedding.embed(rho.mat()));
  }
  return out;
}

std::vector<Mat> boundary_costates(const StateSet& set,
                                   const SubspaceEmbedding& embedding,
                                   const Mat& logical_target) {
  if (embedding.logical_dim() != set.dim) {
    throw std::invalid_argument("boundary_costates: dimension mismatch");
  }
  require_unitary(logical_target, "gate target");
  std::vector<Mat> out;
  out.reserve(set.states.size());
  for (size_t i = 0; i < set.states.size(); ++i) {
    const Mat& rho = set.states[i].mat();
    const double purity = set.states[i].purity();
    const Mat rotated = logical_target * rho * logical_target.adjoint();
    out.push_back(embedding.embed(set.weights[i] / purity * rotated));
  }
  return out;
}

}  // namespace qgo
